#![allow(dead_code)]
pub mod rewriting;
