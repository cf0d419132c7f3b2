//! The 2-uple embedding of the plane, the conic-rank stratification of its
//! ambient 5-space, the secant cubic, special points and lines, projections,
//! and the two projection verifiers.
//!
//! The basis of conics is fixed as (x^2, xy, xz, y^2, yz, z^2); a conic is a
//! point of projective 5-space through its six coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::hilbert_data;
use crate::image::{
    fiber_length, image_degree, implicitize_map, map_degree, singular_locus, LocusKind,
    SingularLocus,
};
use crate::matrix::{coefficient_matrix, quadratic_form_matrix, RatMatrix};
use crate::monomial::{Monomial, MonomialOrder};
use crate::pencil::{pencil_generic_rank, rank_strata, QuadricPencil, RankStratum};
use crate::plucker::plucker_ring;
use crate::poly::{poly_det, Poly, Ring};
use crate::rat::Rat;
use crate::rng::{random_rat, rng_from_seed};

/// Index order of the fixed conic basis.
const CONIC_BASIS: [[u32; 3]; 6] = [
    [2, 0, 0], // x^2
    [1, 1, 0], // xy
    [1, 0, 1], // xz
    [0, 2, 0], // y^2
    [0, 1, 1], // yz
    [0, 0, 2], // z^2
];

/// A conic identified with a point of the target 5-space of the monomial
/// quadratic map.
///
/// The identification halves the mixed coefficients: the conic
/// a x^2 + b xy + c xz + d y^2 + e yz + f z^2 sits at the point
/// (a : b/2 : c/2 : d : e/2 : f). Under this chart the double line
/// (px + qy + rz)^2 lands exactly on the sextuple (p^2, pq, pr, q^2, qr, r^2),
/// so the surface cut by `veronese_map` is precisely the rank-1 locus and the
/// secant variety is cut by `secant_cubic`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicPoint {
    pub coeffs: [Rat; 6],
}

/// Indices of the mixed-monomial slots in the fixed basis order.
const MIXED: [usize; 3] = [1, 2, 4];

impl ConicPoint {
    /// Point coordinates directly; not all six may vanish.
    pub fn new(coeffs: [Rat; 6]) -> Result<ConicPoint> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroInput);
        }
        Ok(ConicPoint { coeffs })
    }

    pub fn from_poly(q: &Poly) -> Result<ConicPoint> {
        if q.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !q.is_homogeneous_of(2) || q.ring().nvars() != 3 {
            return Err(Error::DegreeMismatch {
                what: "conic",
                expected: 2,
            });
        }
        let half = Rat::new(1.into(), 2.into());
        let coeffs: Vec<Rat> = CONIC_BASIS
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let c = q.coeff(&Monomial::from_exps(e.to_vec()));
                if MIXED.contains(&i) {
                    c * &half
                } else {
                    c
                }
            })
            .collect();
        ConicPoint::new(coeffs.try_into().expect("six coefficients"))
    }

    pub fn to_poly(&self, ring: &Ring) -> Poly {
        assert_eq!(ring.nvars(), 3);
        let two = Rat::from_integer(2.into());
        Poly::from_terms(
            ring.clone(),
            CONIC_BASIS.iter().enumerate().map(|(i, e)| {
                let c = if MIXED.contains(&i) {
                    &self.coeffs[i] * &two
                } else {
                    self.coeffs[i].clone()
                };
                (Monomial::from_exps(e.to_vec()), c)
            }),
        )
    }

    /// The symmetric 3x3 matrix of the conic; in point coordinates the
    /// entries appear without further halving.
    pub fn matrix(&self) -> RatMatrix {
        let [a, b, c, d, e, f] = &self.coeffs;
        RatMatrix::from_rows(vec![
            vec![a.clone(), b.clone(), c.clone()],
            vec![b.clone(), d.clone(), e.clone()],
            vec![c.clone(), e.clone(), f.clone()],
        ])
    }
}

/// Rank of a conic: 1 double line, 2 pair of distinct lines, 3 smooth.
pub fn conic_rank(p: &ConicPoint) -> usize {
    p.matrix().rank()
}

/// The fixed sextuple (x^2, xy, xz, y^2, yz, z^2) as a rational map to the
/// space of conics.
pub fn veronese_map(ring: &Ring) -> Vec<Poly> {
    assert_eq!(ring.nvars(), 3);
    CONIC_BASIS
        .iter()
        .map(|e| Poly::from_term(ring.clone(), Monomial::from_exps(e.to_vec()), Rat::one()))
        .collect()
}

/// The determinant cubic in Z0..Z5 cutting the rank <= 2 conics: in point
/// coordinates the symmetric matrix needs no halving, so the coefficients
/// come out integral.
pub fn secant_cubic() -> Poly {
    let ring = plucker_ring();
    let z = |i: usize| ring.var(i);
    let entries = vec![
        vec![z(0), z(1), z(2)],
        vec![z(1), z(3), z(4)],
        vec![z(2), z(4), z(5)],
    ];
    poly_det(&entries)
}

/// A line of the conic space contained in the secant variety and missing the
/// Veronese surface: both endpoints rank 2, no point of the line rank 1.
#[derive(Clone, Debug)]
pub struct SecantLine {
    a: ConicPoint,
    b: ConicPoint,
}

impl SecantLine {
    pub fn new(a: ConicPoint, b: ConicPoint) -> Result<SecantLine> {
        for (p, which) in [(&a, "first"), (&b, "second")] {
            let r = conic_rank(p);
            if r != 2 {
                return Err(Error::InvalidSecantLine(format!(
                    "{which} endpoint has conic rank {r}, need 2"
                )));
            }
        }
        // endpoints distinct as projective points
        let m = RatMatrix::from_rows(vec![a.coeffs.to_vec(), b.coeffs.to_vec()]);
        if m.rank() != 2 {
            return Err(Error::InvalidSecantLine("endpoints coincide".into()));
        }
        let line = SecantLine { a, b };
        // rank-1 locus on the line: common vanishing of the 2x2 minors of the
        // symbolic member matrix; the line misses the surface exactly when
        // that locus is empty, i.e. the minor gcd is a nonzero constant
        let sym = line.symbolic_matrix();
        let mut gcd: Option<crate::uni::UniPoly> = None;
        let mut mu_mult_min = usize::MAX;
        for rows in [[0, 1], [0, 2], [1, 2]] {
            for cols in [[0, 1], [0, 2], [1, 2]] {
                let det = sym[rows[0]][cols[0]]
                    .mul(&sym[rows[1]][cols[1]])
                    .sub(&sym[rows[0]][cols[1]].mul(&sym[rows[1]][cols[0]]));
                if det.is_zero() {
                    continue;
                }
                let deg = det.total_degree().unwrap() as usize;
                let mut coeffs = vec![Rat::zero(); deg + 1];
                for (mm, c) in det.terms() {
                    coeffs[mm.exp(0) as usize] = c.clone();
                }
                let f = crate::uni::UniPoly::from_coeffs(coeffs);
                mu_mult_min = mu_mult_min.min(deg - f.degree().unwrap());
                gcd = Some(match gcd {
                    None => f,
                    Some(g) => g.gcd(&f),
                });
            }
        }
        let rank1_empty = match gcd {
            None => false, // every 2x2 minor vanishes identically: rank <= 1 line
            Some(g) => g.degree() == Some(0) && mu_mult_min == 0,
        };
        if !rank1_empty {
            return Err(Error::InvalidSecantLine(
                "the line meets the Veronese surface (a rank-1 point)".into(),
            ));
        }
        // the line lies inside the secant variety: the cubic vanishes on the
        // whole symbolic parametrization
        let cubic = secant_cubic();
        let param_ring = Ring::new(vec!["s", "u"]);
        let s = param_ring.var(0);
        let u = param_ring.var(1);
        let images: Vec<Poly> = (0..6)
            .map(|i| s.scale(&line.a.coeffs[i]).add(&u.scale(&line.b.coeffs[i])))
            .collect();
        if !cubic.substitute(&images)?.is_zero() {
            return Err(Error::InvalidSecantLine(
                "the line leaves the secant variety".into(),
            ));
        }
        Ok(line)
    }

    pub fn endpoints(&self) -> (&ConicPoint, &ConicPoint) {
        (&self.a, &self.b)
    }

    /// 3x3 symmetric matrices with entries linear in the line parameters (s, u).
    fn symbolic_matrix(&self) -> Vec<Vec<Poly>> {
        let ring = Ring::new(vec!["s", "u"]);
        let s = ring.var(0);
        let u = ring.var(1);
        let ma = self.a.matrix();
        let mb = self.b.matrix();
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| s.scale(ma.get(i, j)).add(&u.scale(mb.get(i, j))))
                    .collect()
            })
            .collect()
    }

    pub fn point_at(&self, s: &Rat, u: &Rat) -> Result<ConicPoint> {
        let coeffs: Vec<Rat> = (0..6)
            .map(|i| s * &self.a.coeffs[i] + u * &self.b.coeffs[i])
            .collect();
        ConicPoint::new(coeffs.try_into().expect("six"))
    }
}

/// The line through [L0*m1] and [L0*m2]; this is a line of the plane of
/// conics through L0, missing the surface whenever L0 is outside the span of
/// m1, m2.
pub fn special_line(l0: &Poly, m1: &Poly, m2: &Poly) -> Result<SecantLine> {
    for f in [l0, m1, m2] {
        if f.is_zero() || !f.is_homogeneous_of(1) {
            return Err(Error::DegreeMismatch {
                what: "special line input",
                expected: 1,
            });
        }
    }
    l0.same_ring(m1)?;
    l0.same_ring(m2)?;
    let a = ConicPoint::from_poly(&l0.mul(m1))?;
    let b = ConicPoint::from_poly(&l0.mul(m2))?;
    SecantLine::new(a, b)
}

/// Projection of the Veronese surface from a rank-2 conic point: the
/// composed degree-2 map to projective 4-space. The chart drops the first
/// coordinate where the center does not vanish (or a caller-chosen one), and
/// the remaining five coordinates are corrected modulo the center.
pub fn project_from_point(p: &ConicPoint, chart_drop: Option<usize>) -> Result<Vec<Poly>> {
    let r = conic_rank(p);
    if r != 2 {
        return Err(Error::ConicRank {
            expected: 2,
            found: r,
        });
    }
    let pivot = match chart_drop {
        Some(i) => {
            if i >= 6 || p.coeffs[i].is_zero() {
                return Err(Error::Unsupported(
                    "chart must drop a coordinate where the center is nonzero".into(),
                ));
            }
            i
        }
        None => (0..6)
            .find(|&i| !p.coeffs[i].is_zero())
            .expect("nonzero conic"),
    };
    let ring = Ring::new(vec!["x", "y", "z"]);
    let v = veronese_map(&ring);
    let inv = p.coeffs[pivot].recip();
    let mut out = Vec::with_capacity(5);
    for i in 0..6 {
        if i == pivot {
            continue;
        }
        // v_i - (p_i / p_pivot) * v_pivot
        out.push(v[i].sub(&v[pivot].scale(&(&p.coeffs[i] * &inv))));
    }
    Ok(normalize_tuple(out))
}

/// Projection of the Veronese surface from a secant line: the composed map to
/// projective 3-space. The chart drops two coordinates over which the center
/// has an invertible block (the echelon pivots by default); each kept
/// coordinate is corrected modulo the center so the dropped ones vanish.
pub fn project_from_line(line: &SecantLine, chart_drop: Option<[usize; 2]>) -> Result<Vec<Poly>> {
    let (a, b) = line.endpoints();
    let drops = match chart_drop {
        Some(d) => {
            let ok = d[0] != d[1]
                && d.iter().all(|&i| i < 6)
                && RatMatrix::from_rows(vec![
                    vec![a.coeffs[d[0]].clone(), a.coeffs[d[1]].clone()],
                    vec![b.coeffs[d[0]].clone(), b.coeffs[d[1]].clone()],
                ])
                .rank()
                    == 2;
            if !ok {
                return Err(Error::Unsupported(
                    "chart must drop two coordinates spanning the center".into(),
                ));
            }
            d
        }
        None => {
            let span = RatMatrix::from_rows(vec![a.coeffs.to_vec(), b.coeffs.to_vec()]);
            let (_, pivots) = span.rref();
            debug_assert_eq!(pivots.len(), 2);
            [pivots[0], pivots[1]]
        }
    };
    // center rows with unit pivots on the dropped coordinates
    let reordered: Vec<usize> = drops
        .iter()
        .copied()
        .chain((0..6).filter(|i| !drops.contains(i)))
        .collect();
    let perm_rows: Vec<Vec<Rat>> = [a, b]
        .iter()
        .map(|p| reordered.iter().map(|&i| p.coeffs[i].clone()).collect())
        .collect();
    let (rr, _) = RatMatrix::from_rows(perm_rows).rref();
    let unpermute = |row: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); 6];
        for (k, &orig) in reordered.iter().enumerate() {
            out[orig] = row[k].clone();
        }
        out
    };
    let r1 = unpermute(rr.row(0)); // unit at drops[0], zero at drops[1]
    let r2 = unpermute(rr.row(1)); // unit at drops[1], zero at drops[0]
    let ring = Ring::new(vec!["x", "y", "z"]);
    let v = veronese_map(&ring);
    let mut out = Vec::with_capacity(4);
    for i in 0..6 {
        if drops.contains(&i) {
            continue;
        }
        // pi(v)_i = v_i - v_{d0} r1_i - v_{d1} r2_i
        let w = v[i]
            .sub(&v[drops[0]].scale(&r1[i]))
            .sub(&v[drops[1]].scale(&r2[i]));
        out.push(w);
    }
    Ok(normalize_tuple(out))
}

/// Joint scaling making every coefficient integral with overall content 1.
fn normalize_tuple(tuple: Vec<Poly>) -> Vec<Poly> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut den = BigInt::one();
    for p in &tuple {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
    }
    let mut num = BigInt::zero();
    for p in &tuple {
        for (_, c) in p.terms() {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
    }
    if num.is_zero() {
        return tuple;
    }
    let scale = Rat::new(den, num);
    tuple.into_iter().map(|p| p.scale(&scale)).collect()
}

/// Everything `verify_point_remark` computes and asserts.
#[derive(Clone, Debug)]
pub struct PointRemarkReport {
    pub projection: Vec<Poly>,
    pub image_ideal: Ideal,
    pub quadrics: (Poly, Poly),
    pub generic_rank: usize,
    pub det_identically_zero: bool,
    pub rank3_strata: Vec<RankStratum>,
    pub singular_line: SingularLocus,
    /// The conic on the surface over the singular line: the plane spanned by
    /// the line and the center cuts the surface in this degree-2 curve,
    /// written in the plane's own coordinates (s, u, v).
    pub preimage_conic: Poly,
    /// Reduced curve in the source plane double-covering the singular line;
    /// its image under the quadratic system is the conic above.
    pub source_curve: Poly,
    pub fiber_lengths: Vec<u64>,
    pub image_degree: u64,
    pub map_degree: u64,
}

/// Checks the structure of the projection of the Veronese surface from a
/// rank-2 conic point: a degree-4 surface in projective 4-space cut out by a
/// pencil of quadrics of ranks 3 and 4, singular along a line whose preimage
/// is a conic double-covering it.
pub fn verify_point_remark(p: &ConicPoint, seed: u64) -> Result<PointRemarkReport> {
    let fail = |assertion: &str, detail: String| Error::VerificationFailed {
        assertion: assertion.into(),
        detail,
    };
    let projection = project_from_point(p, None)?;
    let image = implicitize_map(&projection, &["Z0", "Z1", "Z2", "Z3", "Z4"])?;
    let gb = image.groebner_basis(MonomialOrder::GrevLex)?;
    let quadrics: Vec<Poly> = gb
        .iter()
        .filter(|g| g.total_degree() == Some(2))
        .cloned()
        .collect();
    if quadrics.len() != 2 {
        return Err(fail(
            "two quadric generators",
            format!(
                "found {} degree-2 elements in the reduced basis",
                quadrics.len()
            ),
        ));
    }
    let two = Ideal::new(image.ring().clone(), quadrics.clone());
    if !two.equals(&image)? {
        return Err(fail(
            "two quadric generators",
            "the two quadrics do not generate the full image ideal".into(),
        ));
    }
    let pencil = QuadricPencil::from_quadrics(&quadrics[0], &quadrics[1])?;
    let rank = pencil_generic_rank(&pencil, seed)?;
    if rank.generic_rank != 4 || !rank.det_identically_zero {
        return Err(fail(
            "pencil generic rank 4 with vanishing determinant",
            format!(
                "generic rank {}, det zero: {}",
                rank.generic_rank, rank.det_identically_zero
            ),
        ));
    }
    let strata = rank_strata(&pencil)?;
    let rank3: Vec<RankStratum> = strata.into_iter().filter(|s| s.rank == 3).collect();
    if rank3.is_empty() {
        return Err(fail(
            "rank-3 members exist",
            "no rank-3 stratum found".into(),
        ));
    }
    let sing = singular_locus(&image)?;
    if sing.kind != LocusKind::Line {
        return Err(fail(
            "singular locus is a line",
            format!("kind {:?}, ideal {:?}", sing.kind, sing.ideal),
        ));
    }
    let deg = image_degree(&image)?;
    if deg != 4 {
        return Err(fail("image degree 4", format!("degree {deg}")));
    }
    let mdeg = map_degree(&projection, &image, seed, 5)?;
    if mdeg != 1 {
        return Err(fail(
            "projection is birational onto the image",
            format!("map degree {mdeg}"),
        ));
    }
    // the singular line lives in the same 5 coordinates (no linear forms in
    // the image ideal of a nondegenerate surface), so its linear forms pull
    // back directly
    let line_forms: Vec<Poly> = sing
        .ideal
        .groebner_basis(MonomialOrder::GrevLex)?
        .iter()
        .filter(|g| g.total_degree() == Some(1))
        .cloned()
        .collect();
    if line_forms.len() != 3 {
        return Err(fail(
            "singular line cut by three linear forms",
            format!("found {}", line_forms.len()),
        ));
    }
    // the source-side preimage: pull the line's forms back through the map
    // and strip the irrelevant part; the reduced curve is principal
    let pulled: Vec<Poly> = line_forms
        .iter()
        .map(|f| f.substitute(&projection))
        .collect::<Result<_>>()?;
    let preimage = Ideal::new(projection[0].ring().clone(), pulled).saturate_irrelevant()?;
    let pre_gb = preimage.groebner_basis(MonomialOrder::GrevLex)?;
    if pre_gb.len() != 1 {
        return Err(fail(
            "source preimage of the line is a curve",
            format!("saturated preimage basis {:?}", pre_gb),
        ));
    }
    let source_curve = pre_gb[0].clone();
    // the conic of the classical picture: the plane spanned by the line and
    // the center meets the surface in a degree-2 curve
    let preimage_conic = plane_section_conic(p, &line_forms).map_err(|e| match e {
        Error::VerificationFailed { .. } => e,
        other => other,
    })?;
    // fiber length 2 over seed-fixed random points of the line
    let coeff = coefficient_matrix(&line_forms, 1)?;
    let kernel = coeff.kernel_basis();
    if kernel.len() != 2 {
        return Err(fail(
            "singular line parametrization",
            format!("kernel rank {}", kernel.len()),
        ));
    }
    let mut rng = rng_from_seed(seed ^ 0x5eed);
    let mut fiber_lengths = Vec::new();
    let mut attempts = 0;
    while fiber_lengths.len() < 3 && attempts < 40 {
        attempts += 1;
        let s = random_rat(&mut rng);
        let u = random_rat(&mut rng);
        if s.is_zero() && u.is_zero() {
            continue;
        }
        let point: Vec<Rat> = (0..kernel[0].len())
            .map(|i| &s * &kernel[0][i] + &u * &kernel[1][i])
            .collect();
        if point.iter().all(Zero::is_zero) {
            continue;
        }
        match fiber_length(&projection, &point)? {
            Some(len) => fiber_lengths.push(len),
            None => continue,
        }
    }
    if fiber_lengths.len() < 3 {
        return Err(Error::UnstableFiber);
    }
    if fiber_lengths.iter().any(|&l| l != 2) {
        return Err(fail(
            "double cover of the singular line",
            format!("fiber lengths {:?}", fiber_lengths),
        ));
    }
    Ok(PointRemarkReport {
        projection,
        quadrics: (quadrics[0].clone(), quadrics[1].clone()),
        image_ideal: image,
        generic_rank: rank.generic_rank,
        det_identically_zero: rank.det_identically_zero,
        rank3_strata: rank3,
        singular_line: sing,
        preimage_conic,
        source_curve,
        fiber_lengths,
        image_degree: deg,
        map_degree: mdeg,
    })
}

/// Intersection of the Veronese surface with the plane spanned by the
/// singular line and the projection center: parametrize the plane by the
/// kernel of the three lifted linear forms, cut the rank-1 locus with the
/// 2x2 minors, and saturate down to the conic.
fn plane_section_conic(center: &ConicPoint, line_forms: &[Poly]) -> Result<Poly> {
    let fail = |detail: String| Error::VerificationFailed {
        assertion: "plane section of the surface is a conic".into(),
        detail,
    };
    let pivot = (0..6)
        .find(|&i| !center.coeffs[i].is_zero())
        .expect("nonzero center");
    let kept: Vec<usize> = (0..6).filter(|&i| i != pivot).collect();
    // lift each line form through the central projection: scale by the pivot
    // coordinate of the center and correct along the center
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(line_forms.len());
    for form in line_forms {
        let ring5 = form.ring();
        let mut w = vec![Rat::zero(); 6];
        let mut along_center = Rat::zero();
        for (m, &orig) in kept.iter().enumerate() {
            let c = form.coeff(&Monomial::var(ring5.nvars(), m));
            w[orig] = &c * &center.coeffs[pivot];
            along_center += &c * &center.coeffs[orig];
        }
        w[pivot] = -along_center;
        rows.push(w);
    }
    let plane = RatMatrix::from_rows(rows);
    let basis = plane.kernel_basis();
    if basis.len() != 3 {
        return Err(fail(format!(
            "plane has parameter dimension {}",
            basis.len()
        )));
    }
    let pring = Ring::new(vec!["s", "u", "v"]);
    let coord = |i: usize| -> Poly {
        let mut acc = pring.zero();
        for (k, b) in basis.iter().enumerate() {
            acc = acc.add(&pring.var(k).scale(&b[i]));
        }
        acc
    };
    let q = [coord(0), coord(1), coord(2), coord(3), coord(4), coord(5)];
    let sym = [
        [&q[0], &q[1], &q[2]],
        [&q[1], &q[3], &q[4]],
        [&q[2], &q[4], &q[5]],
    ];
    let mut minors = Vec::new();
    for r1 in 0..3 {
        for r2 in r1 + 1..3 {
            for c1 in 0..3 {
                for c2 in c1 + 1..3 {
                    let det = sym[r1][c1]
                        .mul(sym[r2][c2])
                        .sub(&sym[r1][c2].mul(sym[r2][c1]));
                    if !det.is_zero() {
                        minors.push(det);
                    }
                }
            }
        }
    }
    let section = Ideal::new(pring, minors).saturate_irrelevant()?;
    let gb = section.groebner_basis(MonomialOrder::GrevLex)?;
    if gb.len() != 1 || gb[0].total_degree() != Some(2) {
        return Err(fail(format!("plane section basis {:?}", gb)));
    }
    Ok(gb[0].clone())
}

/// Everything `verify_line_remark` computes and asserts.
#[derive(Clone, Debug)]
pub struct LineRemarkReport {
    pub projection: Vec<Poly>,
    pub image_quadric: Poly,
    pub quadric_rank: usize,
    pub vertex: SingularLocus,
    pub image_degree: u64,
    pub map_degree: u64,
}

/// Checks the structure of the projection of the Veronese surface from a
/// secant line missing it: a rank-3 quadric surface (a cone) in projective
/// 3-space, reached two-to-one.
pub fn verify_line_remark(line: &SecantLine, seed: u64) -> Result<LineRemarkReport> {
    let fail = |assertion: &str, detail: String| Error::VerificationFailed {
        assertion: assertion.into(),
        detail,
    };
    let projection = project_from_line(line, None)?;
    let image = implicitize_map(&projection, &["W0", "W1", "W2", "W3"])?;
    let gb = image.groebner_basis(MonomialOrder::GrevLex)?;
    if gb.len() != 1 || gb[0].total_degree() != Some(2) {
        return Err(fail(
            "image is a single quadric",
            format!("reduced basis {:?}", gb),
        ));
    }
    let image_quadric = gb[0].clone();
    let m = quadratic_form_matrix(&image_quadric)?;
    let quadric_rank = m.rank();
    if quadric_rank != 3 {
        return Err(fail(
            "image quadric has rank 3",
            format!("rank {quadric_rank}"),
        ));
    }
    let vertex = singular_locus(&image)?;
    if vertex.kind != LocusKind::Point {
        return Err(fail(
            "cone vertex is the unique singular point",
            format!("kind {:?}", vertex.kind),
        ));
    }
    let deg = image_degree(&image)?;
    if deg != 2 {
        return Err(fail("image degree 2", format!("degree {deg}")));
    }
    let mdeg = map_degree(&projection, &image, seed, 5)?;
    if mdeg != 2 {
        return Err(fail(
            "projection is generically two-to-one",
            format!("map degree {mdeg}"),
        ));
    }
    Ok(LineRemarkReport {
        projection,
        image_quadric,
        quadric_rank,
        vertex,
        image_degree: deg,
        map_degree: mdeg,
    })
}

/// Degree/dimension data of the full Veronese surface, used by self-checks.
pub fn veronese_image_data() -> Result<(u64, SingularLocus)> {
    let ring = Ring::new(vec!["x", "y", "z"]);
    let v = veronese_map(&ring);
    let image = implicitize_map(&v, &["Z0", "Z1", "Z2", "Z3", "Z4", "Z5"])?;
    let hd = hilbert_data(&image)?;
    if hd.projective_dimension != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: hd.projective_dimension,
        });
    }
    let sing = singular_locus(&image)?;
    Ok((hd.degree.expect("surface degree"), sing))
}

/// A deterministic rank-2 conic from two independent random lines.
pub fn random_rank2_conic(seed: u64) -> ConicPoint {
    let ring = Ring::new(vec!["x", "y", "z"]);
    let mut rng = rng_from_seed(seed);
    loop {
        let l = crate::rng::random_form(&ring, 1, &mut rng);
        let m = crate::rng::random_form(&ring, 1, &mut rng);
        let independent = coefficient_matrix(&[l.clone(), m.clone()], 1)
            .map(|c| c.rank() == 2)
            .unwrap_or(false);
        if independent {
            return ConicPoint::from_poly(&l.mul(&m)).expect("product of independent lines");
        }
    }
}

/// A deterministic valid special line via the plane-of-conics construction.
pub fn random_special_line(seed: u64) -> SecantLine {
    let ring = Ring::new(vec!["x", "y", "z"]);
    let mut rng = rng_from_seed(seed);
    loop {
        let l0 = crate::rng::random_form(&ring, 1, &mut rng);
        let m1 = crate::rng::random_form(&ring, 1, &mut rng);
        let m2 = crate::rng::random_form(&ring, 1, &mut rng);
        if let Ok(line) = special_line(&l0, &m1, &m2) {
            return line;
        }
    }
}
