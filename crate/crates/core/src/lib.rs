pub mod corpus;
pub mod fol;
pub mod harness;
pub mod model;
pub mod modelfinder;
pub mod parser;
pub mod prover;
pub mod restrictions;
pub mod sat;
pub mod tptp;
pub mod translator;
