//! Command line interface and HTTP suggestion service for `swabhasha`.

pub mod cli;
pub mod config;
pub mod http;
pub mod wire;

pub use config::{DataPaths, ServiceConfig};
pub use http::{router, serve, ServiceHandle};
