//! Multisegment combinatorics over the type-A root lattice: the
//! Knuth-Viennot RSK transform into ladders, bitableaux, derivative
//! operators with their grading shifts, and the dictionary between
//! restricted multipartitions and ladder multisegments.
//!
//! ```
//! use ladders_core::{rsk_transform, Multisegment};
//!
//! let m: Multisegment = "[1,1]+[1,2]".parse().unwrap();
//! assert_eq!(rsk_transform(&m).unwrap().to_string(), "[1,2] ; [1,1]");
//! ```

pub mod error;
pub mod lattice;
pub mod multisegment;
pub mod oracle;
pub mod rsk;
pub mod specht;
pub mod strings;
pub mod tableaux;

pub use error::{Error, ParseError, Result};
pub use lattice::{cartan_form, ell_form, DominantWeight, LaurentPoly, Weight};
pub use multisegment::{point_multisegment, Multisegment, Segment};
pub use rsk::{
    bitableau_of, depth_function, is_permissible_pair, knuth_viennot, knuth_viennot_with,
    rsk_transform, width, DepthEntry, DepthTable, LadderSequence,
};
pub use specht::{
    column_removal_check, content, content_multi, is_proper, is_restricted, ladder_of_partition,
    multiseg_of, pad, specht_rsk_verify, Multicharge, Multipartition, SpechtRskReport,
};
pub use strings::{
    bz_derivative, bz_string, c_prime_tuple, c_tuple, phi_multiseg, phi_weights, single_derivative,
    transfer_multiplicities, AdmissibleSequence, MultiplicityTable, StringVector,
};
pub use tableaux::{
    c_count, gamma_descriptor, ladders_of, pair_checks, residue_sequence, standard_tableaux,
    BitableauPair, GammaDescriptor, InvertedSsyt, Partition, StandardTableau,
};
