//! Exact-arithmetic computational geometry for morphisms of the projective
//! plane into Gr(2, C^4).
//!
//! The crate takes a presentation of a rank-2 bundle with Chern classes
//! (2, 2) plus four generating sections, computes the induced map in Plucker
//! coordinates, implicitizes and classifies the image (two hyperplanes, or a
//! hyperplane and a quadric), and independently verifies the corresponding
//! projections of the Veronese surface. All arithmetic is exact rational.

pub mod bundle;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod image;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod pencil;
pub mod plucker;
pub mod poly;
pub mod rat;
pub mod rng;
pub mod uni;
pub mod veronese;

pub use bundle::{
    chern_of_cokernel, section_basis, section_combine, ChernPair, Presentation, SectionE,
};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use hilbert::{hilbert_data, is_empty_projective, HilbertData};
pub use image::{
    classify, image_degree, implicitize, implicitize_map, map_degree, quadric_span, singular_locus,
    CaseReport, CaseTag, LocusKind, SingularLocus,
};
pub use matrix::{matrix_rank_kernel, quadratic_form_matrix, RatMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use pencil::{
    pencil_generic_rank, rank_strata, restrict_to_hyperplane, QuadricPencil, RankStratum,
    StratumParam,
};
pub use plucker::{
    generates_check, grassmann_relation, normalize_sections, plucker_map, plucker_ring,
    wedge_quadric, NormalizedQuadruple, PluckerMap, SectionQuadruple,
};
pub use poly::{jacobian_matrix, Poly, Ring};
pub use rat::Rat;
pub use uni::UniPoly;
pub use veronese::{
    conic_rank, project_from_line, project_from_point, secant_cubic, special_line,
    verify_line_remark, verify_point_remark, veronese_map, ConicPoint, LineRemarkReport,
    PointRemarkReport, SecantLine,
};
