//! Library surface of the domination-prism CLI: graph6 parsing, small-graph
//! generation, the census scan pipeline and the verification suites.

pub mod family;
pub mod gen;
pub mod graph6;
pub mod random;
pub mod scan;
pub mod verify;
