//! Exact enumeration and construction of binary words avoiding a forbidden
//! factor, with the family `1^(j+1) 0^j` treated in depth: generating
//! functions, Riordan triangles, jumping and marked succession rules, and a
//! lattice-path construction in which marked copies annihilate the words
//! that contain the pattern.

pub mod cli;
pub mod paths;
pub mod pattern;
pub mod riordan;
pub mod rules;
pub mod series;
pub mod verify;
