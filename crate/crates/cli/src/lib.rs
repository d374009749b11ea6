//! Command-line front end: named centers, randomized verification runs and
//! SVG figures.

pub mod centers;
pub mod figure;
pub mod heronian;
pub mod parse;
pub mod sampling;
pub mod verify;
