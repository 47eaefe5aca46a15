pub mod cli;
pub mod control;
pub mod cyclic;
pub mod exactalg;
pub mod simplicial;
pub mod stratified;
