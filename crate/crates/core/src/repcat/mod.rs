//! Representations of acyclic quivers and the associated cluster category.

pub mod category;
pub mod inventory;
pub mod linalg;
pub mod presentation;
pub mod rep;
pub mod tau;

pub use category::{CatObject, Category};
pub use inventory::{Coords, IndecObject, Inventory, ObjectKind, Tube, TubeAtlas, DEFAULT_INVENTORY_DEPTH};
pub use presentation::Presentation;
pub use rep::{ext1_dim, hom_dim, Path, Quiver, QuiverRep};
pub use tau::{tau, tau_inverse};
