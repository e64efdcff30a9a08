//! Kohnert diagrams, key polynomials and bijective Pieri rules for them.
//!
//! Diagrams are finite sets of cells `(col, row)`, 1-indexed, rows counted from the bottom.
//!
//! ```
//! use kohnert::{key_polynomial, pieri_signed_expansion, verify_expansion, Polynomial, WeakComposition};
//!
//! let a = WeakComposition::new(vec![2, 0, 3, 2]);
//! let e = pieri_signed_expansion(&a, 3)?;
//! let lhs = key_polynomial(&a)?.mul(&Polynomial::complete_homogeneous(1, 3, 4))?;
//! assert!(verify_expansion(&lhs, &e)?);
//! assert_eq!(e.to_text(), "k[2,0,4,2] + k[2,1,3,2] + k[2,3,3,0] + k[3,0,3,2] - k[3,2,3,0]");
//! # Ok::<(), kohnert::Error>(())
//! ```
#![no_std]

extern crate alloc;

pub mod composition;
pub mod diagram;
pub mod error;
pub mod expand;
pub mod insertion;
pub mod matching;
pub mod pieri;
pub mod polynomial;
pub mod space;
pub mod stratify;
pub mod tableau;

pub use composition::{compositions_bounded, WeakComposition};
pub use diagram::{
    column_weight, deficiency, is_generic, key_diagram, kohnert_successors, row_weight, weight, Cell,
    Diagram,
};
pub use error::{Error, Result};
pub use expand::{key_expand, key_expand_with, KeyCache, SignedKeyExpansion};
pub use insertion::{
    bottom_insert, bottom_remove, final_moved_cell, insert_strip, rectify, removable_analysis,
    removable_extremes, rho_step, top_insert, top_insert_trace, un_rectify, RectificationTrace,
    RemovableReport, StripMode,
};
pub use matching::{
    anchor_weight, kohnert_labeling, matching_of_labeling, path_length, path_lengths,
    thread_decomposition, thread_weight, validate_matching, Labeling, MatchingSequence,
    ThreadDecomposition,
};
pub use pieri::{
    addable_cells, column_expansion, drop_composition, horizontal_strip_expansion,
    horizontal_strip_expansion_with, is_vexillary, k_addable_cells, lehmer_code, nonneg_pieri,
    pieri_signed_expansion, row_set, satisfies_vex1, satisfies_vex2, supp_composition,
    verify_expansion, AddableCell,
};
pub use polynomial::{poly_add, poly_eq, poly_mul, Polynomial};
pub use space::{
    enumerate_kd, enumerate_target_space, key_polynomial, key_polynomial_capped, kd_membership,
    lswap_down_set, lswap_leq, stratum_membership, target_generators, target_membership,
    KohnertSpace, TargetSpace, DEFAULT_CAP,
};
pub use stratify::{
    added_column, added_column_set, below_row_criterion, degree_m_excised_weight, excised_weight,
    find_drop_decomposition, stratum_inverse, stratum_map, stratum_map_m, stratum_map_split,
    stratum_split, DropDecomposition, StratumSplit,
};
pub use tableau::{diagram_of_tableau, enumerate_ssyt, rsk_insert, schur_polynomial, tableau_of_diagram, Tableau};
