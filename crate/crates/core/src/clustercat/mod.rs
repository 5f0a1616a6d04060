//! Concrete models of a 2-Calabi–Yau cluster category with a fixed
//! cluster-tilting object: the combinatorial polygon/arc model (total cone
//! support) and the module-theoretic model (restricted cone support).

pub mod arcs;
pub mod modback;

pub use arcs::{Arc, ArcCategory, ArcObject};
pub use modback::{arc_to_indec, arc_to_mod, indec_to_arc, mod_to_arc, ModCategory, ModIndec, ModObject};
