pub mod cli;
pub mod coloring;
pub mod error;
pub mod hypergraph;
pub mod oracle;
pub mod proof;
pub mod witness;
