pub mod cli;
pub mod coxeter;
pub mod exactmath;
pub mod ftriangle;
pub mod par;
pub mod regions;
pub mod zerolocus;
