//! Expression language and command-line front end.

pub mod app;
pub mod files;
pub mod parse;

pub use app::dispatch;
pub use parse::{parse, Expr, InputError, Session};
