//! Finite commutative rings, their modules, and localization at
//! multiplicative sets, with exhaustive checkers for submodule properties
//! and a harness that sweeps localization statements over finite corpora.

pub mod error;
pub mod harness;
pub mod instance;
pub mod localization;
pub mod module;
pub mod properties;
pub mod report;
pub mod ring;
pub mod set;

mod lattice;

pub use error::{AlgebraError, Result};
pub use harness::{
    check, necessity_search, necessity_search_instances, sweep, sweep_instances, Corpus, CorpusConfig, Instance,
    PropositionCheck, SearchReport, SweepReport, MODULE_SIZE_CAP,
};
pub use instance::{InstanceFile, LoadedInstance, ModuleSpec, RingSpec};
pub use localization::{
    localize_module, localize_module_over, localize_ring, FractionClasses, LocalizedModule, LocalizedRing,
};
pub use module::{quotient_module, regular_module, FiniteModule, ModuleId, NotPrimeSet, Submodule};
pub use properties::{PropertyVerdict, Witness};
pub use ring::{
    find_isomorphism, make_zn, product_ring, quotient_ring, FiniteRing, IdealSet, IdealViolation, MultiplicativeSet,
    RingMap,
};
pub use set::ElementSet;
