pub mod closure;
pub mod disk;
pub mod dual;
pub mod mgraph;
pub mod emit;
