//! Exact arithmetic toolkit for Laguerre-type polynomial families, their
//! production matrices and coefficientwise total positivity.

pub mod exec;
pub mod poly;
pub mod series;
pub mod matrix;
pub mod digraphs;
pub mod laguerre;
pub mod srpaths;
pub mod quadtp;
pub mod banded;
pub mod verify;
