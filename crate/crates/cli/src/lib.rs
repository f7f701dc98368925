//! Command-line front end for the optocog models.

pub mod commands;
pub mod config;
pub mod table;
