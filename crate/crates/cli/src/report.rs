//! The full pipeline runner and its machine/human renderings.
//!
//! Reports are byte-deterministic for a fixed job (including the seed): all
//! randomized subroutines run off explicit seeds and the JSON field order is
//! the declaration order below. Engine statistics count deterministic work
//! (basis runs, reduction steps), not wall time.

use grplane_core::bundle::chern_of_cokernel;
use grplane_core::groebner;
use grplane_core::image::{
    classify, image_degree, linear_section, map_degree, singular_locus, CaseTag,
};
use grplane_core::monomial::MonomialOrder;
use grplane_core::pencil::{pencil_generic_rank, rank_strata, QuadricPencil, StratumParam};
use grplane_core::plucker::plucker_map;
use serde::Serialize;

use crate::diag::{CliError, Code};
use crate::job::Job;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub order: String,
    pub seed: u64,
    pub chern: ChernOut,
    pub plucker_quadrics: [String; 6],
    pub span_dim: usize,
    pub case: String,
    pub hyperplanes: Vec<String>,
    pub extra_quadric: Option<String>,
    pub image_ideal: Vec<String>,
    pub image_degree: u64,
    pub map_degree: u64,
    pub pencil: Option<PencilOut>,
    pub singular_locus: LocusOut,
    pub stats: Stats,
}

#[derive(Debug, Serialize)]
pub struct ChernOut {
    pub c1: i64,
    pub c2: i64,
}

#[derive(Debug, Serialize)]
pub struct PencilOut {
    pub generators: [String; 2],
    pub generic_rank: usize,
    pub det_identically_zero: bool,
    pub strata: Vec<StratumOut>,
}

#[derive(Debug, Serialize)]
pub struct StratumOut {
    pub parameter: String,
    pub rank: usize,
}

#[derive(Debug, Serialize)]
pub struct LocusOut {
    pub kind: String,
    pub ideal: Vec<String>,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub basis_runs: u64,
    pub reduction_steps: u64,
}

pub fn run_pipeline(job: &Job) -> Result<Report, CliError> {
    let (runs0, steps0) = groebner::engine_counters();
    let order = job.order;
    let chern = chern_of_cokernel(&[-1], &[0, 0, 1]).map_err(CliError::from_core_error)?;
    let map = plucker_map(&job.quadruple, &job.presentation).map_err(CliError::from_core_error)?;
    let case = classify(&map).map_err(CliError::from_core_error)?;
    let image = &case.image_ideal;
    let image_gb = image
        .groebner_basis(order)
        .map_err(CliError::from_core_error)?;
    let ideg = image_degree(image).map_err(CliError::from_core_error)?;
    let mdeg =
        map_degree(map.components(), image, job.seed, 5).map_err(CliError::from_core_error)?;
    let pencil = if case.case_tag == CaseTag::B {
        Some(case_b_pencil(image, job.seed)?)
    } else {
        None
    };
    let sing = singular_locus(image).map_err(CliError::from_core_error)?;
    let sing_gb = sing
        .ideal
        .groebner_basis(order)
        .map_err(CliError::from_core_error)?;
    let (runs1, steps1) = groebner::engine_counters();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        order: order.tag(),
        seed: job.seed,
        chern: ChernOut {
            c1: chern.c1,
            c2: chern.c2,
        },
        plucker_quadrics: map
            .quadrics()
            .iter()
            .map(|q| q.to_string_with(order))
            .collect::<Vec<_>>()
            .try_into()
            .expect("six quadrics"),
        span_dim: case.span_dim,
        case: case.case_tag.as_str().to_string(),
        hyperplanes: case
            .hyperplanes
            .iter()
            .map(|h| h.to_string_with(order))
            .collect(),
        extra_quadric: case.extra_quadric.as_ref().map(|q| q.to_string_with(order)),
        image_ideal: image_gb.iter().map(|g| g.to_string_with(order)).collect(),
        image_degree: ideg,
        map_degree: mdeg,
        pencil,
        singular_locus: LocusOut {
            kind: sing.kind.as_str().to_string(),
            ideal: sing_gb.iter().map(|g| g.to_string_with(order)).collect(),
            witness: sing.witness,
        },
        stats: Stats {
            basis_runs: runs1 - runs0,
            reduction_steps: steps1 - steps0,
        },
    })
}

/// Case-B pencils: restrict the image ideal into its hyperplane and read off
/// the two quadric generators there.
fn case_b_pencil(image: &grplane_core::groebner::Ideal, seed: u64) -> Result<PencilOut, CliError> {
    let section = linear_section(image).map_err(CliError::from_core_error)?;
    let reduced = &section.reduced;
    let gb = reduced
        .groebner_basis(MonomialOrder::GrevLex)
        .map_err(CliError::from_core_error)?;
    let quadrics: Vec<_> = gb
        .iter()
        .filter(|g| g.total_degree() == Some(2))
        .cloned()
        .collect();
    if quadrics.len() != 2 {
        return Err(CliError::new(
            Code::Internal,
            format!(
                "case B restriction should carry two quadrics, found {}",
                quadrics.len()
            ),
        ));
    }
    let pencil = QuadricPencil::from_quadrics(&quadrics[0], &quadrics[1])
        .map_err(CliError::from_core_error)?;
    let rank = pencil_generic_rank(&pencil, seed).map_err(CliError::from_core_error)?;
    let strata = rank_strata(&pencil).map_err(CliError::from_core_error)?;
    Ok(PencilOut {
        generators: [quadrics[0].to_string(), quadrics[1].to_string()],
        generic_rank: rank.generic_rank,
        det_identically_zero: rank.det_identically_zero,
        strata: strata
            .into_iter()
            .map(|s| StratumOut {
                parameter: match &s.parameter {
                    StratumParam::Point(l, m) => {
                        format!(
                            "({}:{})",
                            grplane_core::rat::rat_string(l),
                            grplane_core::rat::rat_string(m)
                        )
                    }
                    StratumParam::MinPoly(p) => format!("minpoly {}", p.to_string_in("t")),
                },
                rank: s.rank,
            })
            .collect(),
    })
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!(
        "schema {}  order {}  seed {}",
        r.schema_version, r.order, r.seed
    ));
    line(format!(
        "chern classes: c1 = {}, c2 = {}",
        r.chern.c1, r.chern.c2
    ));
    line("plucker quadrics (Z0..Z5):".into());
    for (i, q) in r.plucker_quadrics.iter().enumerate() {
        line(format!("  Z{i} = {q}"));
    }
    line(format!("quadric span dimension: {}", r.span_dim));
    match r.case.as_str() {
        "A" => line("case a): complete intersection of two independent hyperplanes".into()),
        "B" => line("case b): complete intersection of a hyperplane and a quadric".into()),
        _ => line("outside the theorem's cases (special morphism)".into()),
    }
    line(format!(
        "hyperplane relations: {}",
        r.hyperplanes.join(", ")
    ));
    if let Some(q) = &r.extra_quadric {
        line(format!("extra quadric: {q}"));
    }
    line(format!("image ideal ({} generators):", r.image_ideal.len()));
    for g in &r.image_ideal {
        line(format!("  {g}"));
    }
    line(format!("image degree: {}", r.image_degree));
    line(format!("map degree: {}", r.map_degree));
    if let Some(p) = &r.pencil {
        line("pencil on the hyperplane section:".into());
        line(format!(
            "  generators: {} ; {}",
            p.generators[0], p.generators[1]
        ));
        line(format!(
            "  generic rank {} ; det identically zero: {}",
            p.generic_rank, p.det_identically_zero
        ));
        for s in &p.strata {
            line(format!("  rank {} member at {}", s.rank, s.parameter));
        }
    }
    line(format!(
        "singular locus: {} -- {}",
        r.singular_locus.kind, r.singular_locus.witness
    ));
    for g in &r.singular_locus.ideal {
        line(format!("  {g}"));
    }
    line(format!(
        "engine: {} basis runs, {} reduction steps",
        r.stats.basis_runs, r.stats.reduction_steps
    ));
    out
}
