pub mod aut;
pub mod cli;
pub mod closure;
pub mod element;
pub mod error;
pub mod group;
pub mod iso;
pub mod lgroup;
pub mod oracle;
pub mod ntheory;
pub mod params;
pub mod structure;
pub mod suites;
pub mod torsion;

pub use element::{Element, Letter, Order, Word};
pub use error::{Error, Result};
pub use group::MacdonaldGroup;
pub use params::GroupParams;
