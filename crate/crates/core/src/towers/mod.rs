//! Filtration-height bookkeeping for links: satellite configurations, a
//! fact database for concordance/cobordism relations, and a sound
//! forward-chaining engine that turns asserted facts into best-height
//! certificates with proof traces.
//!
//! Heights live in half-integer steps ([`Height`]). Facts ([`Fact`],
//! [`FactBase`]) relate pairs of links or their exteriors at optional
//! heights, with positive facts propagating downward in height and negated
//! facts upward; the engine ([`close`], [`infer`]) computes the monotone
//! closure and reports, per relation and pair, the best positive and
//! negative bounds together with traces to axioms. The satellite side
//! ([`SatelliteConfig`], [`build_paper_family`]) constructs the iterated
//! infection families whose facts the engine consumes, checking every
//! mechanizable precondition against the knot catalogue
//! ([`KnotRegistry`]).
//!
//! Modeling note: grope concordance of links at height h is encoded as
//! implying Whitney-tower concordance of the links at the same height;
//! tower cobordism of the exteriors only enters afterwards, two units
//! lower. Statements that phrase the grope hypothesis as directly giving a
//! tower cobordism are recovered by composing the two rules; the engine
//! does not shortcut them into one step.

mod engine;
mod fact;
mod height;
mod satellite;

pub use engine::{
    close, close_with_order, infer, replay, BoundKey, BoundSide, BoundValue, Closure,
    HeightCertificate, TraceTree,
};
pub use fact::{
    exterior_id, link_of_exterior, CoeffSystem, Fact, FactBase, Polarity, Relation, Trace,
};
pub use height::Height;
pub use satellite::{
    build_paper_family, compose_config, ct_infection_fact, infected_link_id,
    slice_infection_fact, CompanionNode, FamilyBuild, J0Descriptor, KnotEntry, KnotRegistry,
    SatelliteConfig, SatelliteTree, SliceJustification,
};
