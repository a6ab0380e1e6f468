#![allow(dead_code)]

pub mod determinant;
pub mod oracle;
