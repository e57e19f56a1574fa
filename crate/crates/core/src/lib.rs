pub mod cli;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod parabolic;
pub mod rouquier;
pub mod soergel;
pub mod verify;
