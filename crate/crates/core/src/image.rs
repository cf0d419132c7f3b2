//! Implicitization of the image, linear-relation analysis, the case split of
//! the structure theorem, image and map degrees, and singular loci.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{hilbert_data, is_empty_projective};
use crate::matrix::{coefficient_matrix, independent_subset, RatMatrix};
use crate::monomial::MonomialOrder;
use crate::plucker::{generates_check, grassmann_relation, plucker_ring, PluckerMap};
use crate::poly::{jacobian_matrix, poly_det, Poly, Ring};
use crate::rat::{rat_string, Rat};
use crate::rng::{random_projective_point, rng_from_seed};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    A,
    B,
    OutOfScope,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::OutOfScope => "out-of-scope",
        }
    }
}

/// Outcome of the case analysis: the linear span of the six quadrics, the
/// hyperplane relations, and the full image ideal.
#[derive(Clone, Debug)]
pub struct CaseReport {
    pub span_dim: usize,
    pub case_tag: CaseTag,
    pub hyperplanes: Vec<Poly>,
    pub extra_quadric: Option<Poly>,
    pub image_ideal: Ideal,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocusKind {
    Empty,
    Point,
    Line,
    Other,
}

impl LocusKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LocusKind::Empty => "empty",
            LocusKind::Point => "point",
            LocusKind::Line => "line",
            LocusKind::Other => "other",
        }
    }
}

/// Saturated singular locus with a classification and a human-readable witness.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub ideal: Ideal,
    pub kind: LocusKind,
    pub witness: String,
}

/// Rank of the coefficient matrix of the six quadrics plus a canonical basis
/// of linear forms in Z0..Z5 vanishing on the image.
pub fn quadric_span(m: &PluckerMap) -> Result<(usize, Vec<Poly>)> {
    let coeff = coefficient_matrix(m.components(), 2)?;
    let rank = coeff.rank();
    let zring = plucker_ring();
    let relations: Vec<Poly> = coeff
        .transpose()
        .kernel_basis()
        .into_iter()
        .map(|v| linear_form(&zring, &v))
        .collect();
    Ok((rank, relations))
}

fn linear_form(ring: &Ring, coeffs: &[Rat]) -> Poly {
    let mut f = ring.zero();
    for (i, c) in coeffs.iter().enumerate() {
        f = f.add(&ring.var(i).scale(c));
    }
    f.primitive_part()
}

/// The full homogeneous ideal of the closed image of the map given by
/// same-degree forms: the kernel of Z_i -> p_i, computed by eliminating the
/// source variables from the graph ideal (Z_i - p_i).
pub fn implicitize_map(components: &[Poly], target_names: &[&str]) -> Result<Ideal> {
    let Some(first) = components.first() else {
        return Err(Error::ZeroInput);
    };
    assert_eq!(components.len(), target_names.len());
    let src = first.ring().clone();
    let deg = components
        .iter()
        .filter_map(Poly::total_degree)
        .max()
        .ok_or(Error::ZeroInput)?;
    for p in components {
        p.same_ring(&src.zero())?;
        if !p.is_homogeneous_of(deg) {
            return Err(Error::Inhomogeneous {
                what: "map components",
            });
        }
    }
    for name in target_names {
        if src.index_of(name).is_some() {
            return Err(Error::Unsupported(format!(
                "target variable `{name}` collides with the source ring"
            )));
        }
    }
    let mut vars: Vec<String> = src.vars().to_vec();
    vars.extend(target_names.iter().map(|s| s.to_string()));
    let big = Ring::new(vars);
    let nsrc = src.nvars();
    let gens: Vec<Poly> = components
        .iter()
        .enumerate()
        .map(|(i, p)| big.var(nsrc + i).sub(&lift_src(p, &big)))
        .collect();
    let graph = Ideal::new(big, gens);
    let image = graph.eliminate(nsrc)?;
    for g in image.generators() {
        if matches!(g.homogeneity(), crate::poly::Homogeneity::Mixed) {
            return Err(Error::Internal(
                "implicitization produced an inhomogeneous generator".into(),
            ));
        }
    }
    Ok(image)
}

/// Lifts a source-ring polynomial into the graph ring (source vars first).
fn lift_src(f: &Poly, big: &Ring) -> Poly {
    Poly::from_terms(
        big.clone(),
        f.terms().map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps.resize(big.nvars(), 0);
            (crate::monomial::Monomial::from_exps(exps), c.clone())
        }),
    )
}

pub fn implicitize(m: &PluckerMap) -> Result<Ideal> {
    implicitize_map(m.components(), &["Z0", "Z1", "Z2", "Z3", "Z4", "Z5"])
}

/// Case A when the quadrics span a 4-space (image = Gr cut by two
/// hyperplanes), case B when they span a 5-space (one hyperplane and one
/// extra quadric), out-of-scope below that.
pub fn classify(m: &PluckerMap) -> Result<CaseReport> {
    if !generates_check(m)? {
        return Err(Error::NotGenerating);
    }
    let (span_dim, hyperplanes) = quadric_span(m)?;
    let image_ideal = implicitize(m)?;
    let case_tag = match span_dim {
        4 => CaseTag::A,
        5 => CaseTag::B,
        0..=3 => CaseTag::OutOfScope,
        _ => {
            return Err(Error::Internal(
                "six generating quadrics always satisfy a linear relation".into(),
            ))
        }
    };
    let extra_quadric = if case_tag == CaseTag::B {
        let zring = image_ideal.ring().clone();
        let mut known = hyperplanes.clone();
        known.push(grassmann_relation());
        let known_ideal = Ideal::new(zring, known);
        let gb = image_ideal.groebner_basis(MonomialOrder::GrevLex)?;
        let mut found = None;
        for g in gb.iter() {
            if g.total_degree() == Some(2)
                && !known_ideal
                    .normal_form(g, MonomialOrder::GrevLex)?
                    .is_zero()
            {
                found = Some(g.clone());
                break;
            }
        }
        Some(found.ok_or_else(|| {
            Error::Internal("case B image ideal has no quadric generator beyond the hyperplane and the Grassmannian".into())
        })?)
    } else {
        None
    };
    Ok(CaseReport {
        span_dim,
        case_tag,
        hyperplanes,
        extra_quadric,
        image_ideal,
    })
}

/// Degree of a surface ideal via its Hilbert polynomial.
pub fn image_degree(image: &Ideal) -> Result<u64> {
    let hd = hilbert_data(image)?;
    if hd.projective_dimension != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: hd.projective_dimension,
        });
    }
    Ok(hd.degree.expect("degree defined in dimension 2"))
}

/// Scheme length of the fiber over a target point, or None when the sample
/// is non-generic (fiber not finite or empty).
pub fn fiber_length(components: &[Poly], target: &[Rat]) -> Result<Option<u64>> {
    let src = components[0].ring().clone();
    assert_eq!(components.len(), target.len());
    let mut gens = Vec::new();
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            let g = components[i]
                .scale(&target[j])
                .sub(&components[j].scale(&target[i]));
            if !g.is_zero() {
                gens.push(g.primitive_part());
            }
        }
    }
    if gens.is_empty() {
        return Ok(None);
    }
    let fiber = Ideal::new(src, gens).saturate_irrelevant()?;
    let hd = hilbert_data(&fiber)?;
    if hd.projective_dimension != 0 {
        return Ok(None);
    }
    Ok(Some(hd.degree.expect("degree defined in dimension 0")))
}

/// Generic fiber cardinality of the map: minimum saturated fiber length over
/// seed-fixed random rational domain points. The length can only jump up at
/// special points, so the minimum over trials is the generic value.
pub fn map_degree(components: &[Poly], image: &Ideal, seed: u64, trials: usize) -> Result<u64> {
    let src = components[0].ring().clone();
    let mut rng = rng_from_seed(seed);
    let mut lengths: Vec<u64> = Vec::new();
    let mut attempts = 0usize;
    while lengths.len() < trials && attempts < trials * 20 {
        attempts += 1;
        let point = random_projective_point(src.nvars(), &mut rng);
        let values: Vec<Rat> = components
            .iter()
            .map(|p| p.evaluate(&point))
            .collect::<Result<_>>()?;
        if values.iter().all(Zero::is_zero) {
            continue;
        }
        for g in image.generators() {
            if !g.evaluate(&values)?.is_zero() {
                return Err(Error::Internal(
                    "image point does not satisfy the image ideal".into(),
                ));
            }
        }
        if let Some(len) = fiber_length(components, &values)? {
            if len > 0 {
                lengths.push(len);
            }
        }
    }
    lengths.into_iter().min().ok_or(Error::UnstableFiber)
}

/// Linear change eliminating the degree-1 part of an ideal: the ideal is
/// re-expressed in the coordinate subspace those forms cut out.
pub struct LinearSection {
    pub reduced: Ideal,
    pub linear_forms: Vec<Poly>,
    pub kept: Vec<usize>,
    original: Ring,
    /// per original variable: either Kept(position in reduced ring) or the
    /// substitution polynomial over the reduced ring
    images: Vec<VarImage>,
}

enum VarImage {
    Kept(usize),
    Rewritten(Poly),
}

pub fn linear_section(ideal: &Ideal) -> Result<LinearSection> {
    let ring = ideal.ring().clone();
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex)?;
    let linear_forms: Vec<Poly> = gb
        .iter()
        .filter(|g| g.total_degree() == Some(1))
        .cloned()
        .collect();
    let rest: Vec<Poly> = gb
        .iter()
        .filter(|g| g.total_degree() > Some(1))
        .cloned()
        .collect();
    // reduced GB: each linear form is monic in its own leading variable and no
    // other basis element mentions that variable at all
    let mut eliminated: Vec<(usize, Poly)> = Vec::new();
    for f in &linear_forms {
        let (lead, lc) = f.leading_term(MonomialOrder::GrevLex).expect("nonzero");
        debug_assert!(lc.is_one());
        let var = (0..ring.nvars())
            .find(|&i| lead.exp(i) == 1)
            .expect("linear lead");
        eliminated.push((var, f.sub(&ring.var(var)).neg()));
    }
    let kept: Vec<usize> = (0..ring.nvars())
        .filter(|i| !eliminated.iter().any(|(v, _)| v == i))
        .collect();
    if kept.is_empty() {
        return Err(Error::Unsupported(
            "ideal cuts out the empty linear section".into(),
        ));
    }
    let sub = Ring::new(
        kept.iter()
            .map(|&i| ring.var_name(i).to_string())
            .collect::<Vec<_>>(),
    );
    let mut images: Vec<VarImage> = Vec::with_capacity(ring.nvars());
    for i in 0..ring.nvars() {
        match kept.iter().position(|&k| k == i) {
            Some(pos) => images.push(VarImage::Kept(pos)),
            None => {
                let expr = &eliminated.iter().find(|(v, _)| *v == i).unwrap().1;
                // tails of reduced linear forms only involve kept variables
                images.push(VarImage::Rewritten(project_by_name(expr, &sub)));
            }
        }
    }
    let section = LinearSection {
        reduced: Ideal::new(sub.clone(), vec![]),
        linear_forms,
        kept,
        original: ring,
        images,
    };
    let reduced_gens: Vec<Poly> = rest.iter().map(|g| section.push_down(g)).collect();
    Ok(LinearSection {
        reduced: Ideal::new(sub, reduced_gens),
        ..section
    })
}

impl LinearSection {
    /// Rewrites an original-ring polynomial modulo the linear forms.
    pub fn push_down(&self, f: &Poly) -> Poly {
        let sub = self.reduced.ring();
        let images: Vec<Poly> = self
            .images
            .iter()
            .map(|im| match im {
                VarImage::Kept(pos) => sub.var(*pos),
                VarImage::Rewritten(p) => p.clone(),
            })
            .collect();
        f.substitute(&images).expect("arity matches original ring")
    }

    /// Evaluates the eliminated variables to lift a reduced-space point back
    /// to original homogeneous coordinates.
    pub fn lift_point(&self, point: &[Rat]) -> Vec<Rat> {
        assert_eq!(point.len(), self.reduced.ring().nvars());
        self.images
            .iter()
            .map(|im| match im {
                VarImage::Kept(pos) => point[*pos].clone(),
                VarImage::Rewritten(p) => p.evaluate(point).expect("arity"),
            })
            .collect()
    }

    pub fn original_ring(&self) -> &Ring {
        &self.original
    }
}

/// Rebuilds a polynomial over a ring holding a subset of the variables,
/// matching variables by name.
fn project_by_name(f: &Poly, target: &Ring) -> Poly {
    let src = f.ring();
    let map: Vec<Option<usize>> = (0..src.nvars())
        .map(|i| target.index_of(src.var_name(i)))
        .collect();
    Poly::from_terms(
        target.clone(),
        f.terms().map(|(m, c)| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    exps[map[i].expect("variable survives in the section ring")] += e;
                }
            }
            (crate::monomial::Monomial::from_exps(exps), c.clone())
        }),
    )
}

/// Jacobian-criterion singular locus: the ideal plus the codimension-sized
/// minors of the Jacobian of its generators, saturated by the irrelevant
/// ideal, computed inside the linear section the degree-1 part cuts out.
pub fn singular_locus(image: &Ideal) -> Result<SingularLocus> {
    let hd = hilbert_data(image)?;
    if hd.projective_dimension < 0 {
        return Err(Error::Unsupported(
            "singular locus of an empty scheme".into(),
        ));
    }
    let section = linear_section(image)?;
    let reduced = &section.reduced;
    let sub = reduced.ring().clone();
    let m = sub.nvars();
    let gens: Vec<Poly> = reduced.generators().to_vec();
    if gens.is_empty() {
        // a linear space is smooth
        return Ok(SingularLocus {
            ideal: Ideal::new(sub.clone(), vec![sub.one()]),
            kind: LocusKind::Empty,
            witness: "smooth (linear space)".into(),
        });
    }
    let codim = (m as i64 - 1) - hd.projective_dimension;
    if codim < 1 {
        return Err(Error::Unsupported("variety fills its linear span".into()));
    }
    let c = codim as usize;
    let jac = jacobian_matrix(&gens);
    let mut minors = all_minors(&jac, c);
    minors.retain(|p| !p.is_zero());
    // keep a spanning subset per degree so the basis run stays small
    if minors.len() > 24 {
        let mut degrees: Vec<u32> = minors.iter().filter_map(Poly::total_degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut slim = Vec::new();
        for d in degrees {
            let of_degree: Vec<Poly> = minors
                .iter()
                .filter(|p| p.total_degree() == Some(d) && p.is_homogeneous_of(d))
                .cloned()
                .collect();
            slim.extend(independent_subset(&of_degree, d)?);
        }
        if !slim.is_empty() {
            minors = slim;
        }
    }
    let mut sing_gens = gens.clone();
    sing_gens.extend(minors);
    let sat = Ideal::new(sub.clone(), sing_gens).saturate_irrelevant()?;
    classify_locus(sat, &section)
}

fn classify_locus(sat: Ideal, section: &LinearSection) -> Result<SingularLocus> {
    let sub = sat.ring().clone();
    let m = sub.nvars();
    if is_empty_projective(&sat)? {
        return Ok(SingularLocus {
            ideal: sat,
            kind: LocusKind::Empty,
            witness: "smooth".into(),
        });
    }
    let hd = hilbert_data(&sat)?;
    match (hd.projective_dimension, hd.degree) {
        (0, Some(1)) => {
            // a saturated degree-1 zero-dimensional scheme is a reduced
            // rational point, cut by m-1 independent linear forms
            let gb = sat.groebner_basis(MonomialOrder::GrevLex)?;
            let linear: Vec<Poly> = gb
                .iter()
                .filter(|g| g.total_degree() == Some(1))
                .cloned()
                .collect();
            let coeff = coefficient_matrix(&linear, 1)?;
            if coeff.rank() != m - 1 {
                return Err(Error::Internal(
                    "saturated point scheme without a full linear part".into(),
                ));
            }
            let kernel = coeff.kernel_basis();
            let lifted = section.lift_point(&kernel[0]);
            let witness = format!("point {}", homogeneous_point_string(&lifted));
            Ok(SingularLocus {
                ideal: sat,
                kind: LocusKind::Point,
                witness,
            })
        }
        (1, Some(1)) => match extract_reduced_line(&sat)? {
            Some(line_ideal) => {
                let gb = line_ideal.groebner_basis(MonomialOrder::GrevLex)?;
                let mut forms: Vec<String> =
                    section.linear_forms.iter().map(|f| f.to_string()).collect();
                forms.extend(gb.iter().map(|f| f.to_string()));
                let witness = format!("line cut by {{{}}}", forms.join(", "));
                Ok(SingularLocus {
                    ideal: line_ideal,
                    kind: LocusKind::Line,
                    witness,
                })
            }
            None => Ok(SingularLocus {
                ideal: sat,
                kind: LocusKind::Other,
                witness: "one-dimensional locus without a certified line".into(),
            }),
        },
        (d, deg) => Ok(SingularLocus {
            ideal: sat,
            kind: LocusKind::Other,
            witness: format!("dimension {d} degree {deg:?} locus"),
        }),
    }
}

/// Specialized reduced-line detection for a saturated ideal of dimension 1
/// and degree 1: two generic hyperplane sections each cut a single reduced
/// point; the line they span must absorb every generator.
fn extract_reduced_line(sat: &Ideal) -> Result<Option<Ideal>> {
    let sub = sat.ring().clone();
    let m = sub.nvars();
    let mut rng = rng_from_seed(0xC0FFEE);
    let mut points: Vec<Vec<Rat>> = Vec::new();
    for _attempt in 0..12 {
        if points.len() == 2 {
            break;
        }
        let h = crate::rng::random_form(&sub, 1, &mut rng);
        let mut gens = sat.generators().to_vec();
        gens.push(h);
        let cut = Ideal::new(sub.clone(), gens).saturate_irrelevant()?;
        let hd = match hilbert_data(&cut) {
            Ok(hd) => hd,
            Err(_) => continue,
        };
        if hd.projective_dimension != 0 || hd.degree != Some(1) {
            continue;
        }
        let gb = cut.groebner_basis(MonomialOrder::GrevLex)?;
        let linear: Vec<Poly> = gb
            .iter()
            .filter(|g| g.total_degree() == Some(1))
            .cloned()
            .collect();
        let coeff = coefficient_matrix(&linear, 1)?;
        if coeff.rank() != m - 1 {
            continue;
        }
        let point = coeff.kernel_basis().remove(0);
        if points.iter().any(|p| same_projective_point(p, &point)) {
            continue;
        }
        points.push(point);
    }
    let [p, q] = points.as_slice() else {
        return Ok(None);
    };
    // ideal of the line through the two section points
    let rows = RatMatrix::from_rows(vec![p.clone(), q.clone()]);
    let forms: Vec<Poly> = rows
        .kernel_basis()
        .iter()
        .map(|v| linear_form(&sub, v))
        .collect();
    debug_assert_eq!(forms.len(), m - 2);
    // certify: every generator vanishes identically on the line
    let pring = Ring::new(vec!["s", "u"]);
    let param: Vec<Poly> = (0..m)
        .map(|i| pring.var(0).scale(&p[i]).add(&pring.var(1).scale(&q[i])))
        .collect();
    for g in sat.generators() {
        if !g.substitute(&param)?.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(Ideal::new(sub, forms)))
}

fn same_projective_point(a: &[Rat], b: &[Rat]) -> bool {
    RatMatrix::from_rows(vec![a.to_vec(), b.to_vec()]).rank() < 2
}

/// Canonical projective coordinates: primitive integers, first nonzero positive.
pub fn homogeneous_point_string(coords: &[Rat]) -> String {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut den = BigInt::one();
    for c in coords {
        den = den.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * &den / c.denom())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    if !g.is_zero() {
        for v in &mut ints {
            *v /= &g;
        }
    }
    let parts: Vec<String> = ints.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(":"))
}

fn all_minors(jac: &[Vec<Poly>], c: usize) -> Vec<Poly> {
    let rows = jac.len();
    let cols = jac[0].len();
    if c > rows || c > cols {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rset in combinations(rows, c) {
        for cset in combinations(cols, c) {
            let m: Vec<Vec<Poly>> = rset
                .iter()
                .map(|&r| cset.iter().map(|&cc| jac[r][cc].clone()).collect())
                .collect();
            out.push(poly_det(&m));
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Jacobian of the affine chart map (components normalized by `norm_comp`,
/// chart variable fixed to 1) evaluated at a projective point: entry (i, j)
/// is d(p_i/p_norm)/d var_j by the quotient rule.
pub fn affine_jacobian_at(
    components: &[Poly],
    chart_var: usize,
    norm_comp: usize,
    point: &[Rat],
) -> Result<RatMatrix> {
    let src = components[0].ring().clone();
    let pnorm = &components[norm_comp];
    let pnorm_val = pnorm.evaluate(point)?;
    if pnorm_val.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n2 = &pnorm_val * &pnorm_val;
    let rows: Vec<Vec<Rat>> = components
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != norm_comp)
        .map(|(_, p)| {
            let pv = p.evaluate(point)?;
            (0..src.nvars())
                .filter(|j| *j != chart_var)
                .map(|j| {
                    let dp = p.derivative(j).evaluate(point)?;
                    let dn = pnorm.derivative(j).evaluate(point)?;
                    Ok((dp * &pnorm_val - &pv * dn) / &n2)
                })
                .collect::<Result<Vec<Rat>>>()
        })
        .collect::<Result<_>>()?;
    Ok(RatMatrix::from_rows(rows))
}

/// `rat_string` re-exported for report formatting convenience.
pub fn format_rat(r: &Rat) -> String {
    rat_string(r)
}
