pub mod error;
pub mod interval;
pub mod scalar;
pub mod surd;
pub mod geom;
pub mod poly;
pub mod graph;
pub mod gen;
pub mod lemmas;
pub mod campaign;
