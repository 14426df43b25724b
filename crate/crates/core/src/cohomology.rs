//! Cochains and cohomology: integral groups through the graded flip, the
//! Kronecker pairing, cup and cap products, ring structure constants, and
//! recognition of free exterior rings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use crate::complex::SimplicialComplex;
use crate::exactlinalg::{f_rank, Field, IntMatrix};
use crate::homology::{
    chain_complex, field_homology, integral_homology, ChainComplexRep, FieldHomology,
    HomologyGroup,
};
use crate::report::Report;
use crate::Result;

/// Coboundary out of cochain degree q: the transpose of the boundary that
/// lands in chain degree q.
pub fn coboundary(cx: &ChainComplexRep, q: usize) -> IntMatrix {
    cx.boundary(q + 1).transpose()
}

/// Integral cohomology, computed by regrading the cochain complex so the
/// integral subquotient machinery applies unchanged. Entry n is H^n.
pub fn integral_cohomology_groups(k: &SimplicialComplex) -> Result<Vec<HomologyGroup>> {
    let cx = chain_complex(k, false);
    let top = cx.top_degree();
    if top < 0 {
        return Ok(Vec::new());
    }
    let top = top as usize;
    let ranks: Vec<usize> = (0..=top).map(|q| cx.rank(top - q)).collect();
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(IntMatrix::zero(0, ranks[0]));
    for q in 1..=top {
        // flipped degree q holds cochain degree top-q; its boundary is the
        // coboundary into degree top-q+1, which is flipped degree q-1
        boundaries.push(coboundary(&cx, top - q));
    }
    let basis = (0..=top).map(|q| (0..ranks[q]).collect()).collect();
    let flipped = ChainComplexRep { reduced: false, ranks, boundaries, basis };
    let h = integral_homology(&flipped);
    Ok((0..=top)
        .map(|n| {
            let mut g = h.group(top - n);
            g.degree = n;
            g
        })
        .collect())
}

pub fn kronecker_int(cochain: &[BigInt], chain: &[BigInt]) -> BigInt {
    assert_eq!(cochain.len(), chain.len());
    cochain.iter().zip(chain).map(|(a, b)| a * b).sum()
}

/// Evaluation of a cochain on a chain.
pub fn kronecker<F: Field>(field: &F, cochain: &[F::E], chain: &[F::E]) -> F::E {
    assert_eq!(cochain.len(), chain.len());
    let mut acc = field.zero();
    for (a, b) in cochain.iter().zip(chain) {
        if !field.is_zero(a) && !field.is_zero(b) {
            acc = field.add(&acc, &field.mul(a, b));
        }
    }
    acc
}

/// Cup product of cochains: evaluate the first factor on the front face and
/// the second on the back face of each (p+q)-simplex.
pub fn cup_cochain<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    p: usize,
    q: usize,
    phi: &[F::E],
    theta: &[F::E],
) -> Vec<F::E> {
    assert_eq!(phi.len(), k.simplices(p).len());
    assert_eq!(theta.len(), k.simplices(q).len());
    let top = k.simplices(p + q);
    let mut out = vec![field.zero(); top.len()];
    for (idx, s) in top.iter().enumerate() {
        let front = &s[..=p];
        let back = &s[p..];
        let fi = k.simplex_index(p, front).expect("front face");
        let bi = k.simplex_index(q, back).expect("back face");
        if !field.is_zero(&phi[fi]) && !field.is_zero(&theta[bi]) {
            out[idx] = field.mul(&phi[fi], &theta[bi]);
        }
    }
    out
}

/// Cap product of an n-chain with a p-cochain, landing in degree n-p: the
/// cochain eats the front face, the back face survives.
pub fn cap<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    n: usize,
    z: &[F::E],
    p: usize,
    phi: &[F::E],
) -> Vec<F::E> {
    assert!(p <= n);
    assert_eq!(z.len(), k.simplices(n).len());
    assert_eq!(phi.len(), k.simplices(p).len());
    let q = n - p;
    let mut out = vec![field.zero(); k.simplices(q).len()];
    for (idx, s) in k.simplices(n).iter().enumerate() {
        if field.is_zero(&z[idx]) {
            continue;
        }
        let front = &s[..=p];
        let back = &s[p..];
        let fi = k.simplex_index(p, front).expect("front face");
        if field.is_zero(&phi[fi]) {
            continue;
        }
        let bi = k.simplex_index(q, back).expect("back face");
        let term = field.mul(&z[idx], &phi[fi]);
        out[bi] = field.add(&out[bi], &term);
    }
    out
}

/// Structure constants of the cup product on classes: for basis cocycles
/// phi_i in degree p and phi_j in degree q, the coordinates of their product
/// in the degree p+q basis.
pub struct CohomologyRing<F: Field> {
    pub dims: Vec<usize>,
    pub products: BTreeMap<(usize, usize, usize, usize), Vec<F::E>>,
}

pub fn ring_structure<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    fh: &FieldHomology<F>,
) -> CohomologyRing<F> {
    let dim = k.dim().max(0) as usize;
    let mut products = BTreeMap::new();
    for p in 0..=dim {
        for q in 0..=dim - p {
            for (i, phi) in fh.cocycle_reps(p).iter().enumerate() {
                for (j, theta) in fh.cocycle_reps(q).iter().enumerate() {
                    let cup = cup_cochain(field, k, p, q, phi, theta);
                    let coords = fh.cocycle_class_coords(p + q, &cup);
                    products.insert((p, i, q, j), coords);
                }
            }
        }
    }
    CohomologyRing { dims: fh.dims.clone(), products }
}

/// Graded commutativity on classes for every basis pair, and associativity
/// on the nose for every basis triple of cocycle representatives.
pub fn verify_cup_laws<F: Field>(field: &F, k: &SimplicialComplex) -> Result<Report> {
    let cx = chain_complex(k, false);
    let fh = field_homology(field, &cx)?;
    let ring = ring_structure(field, k, &fh);
    let dim = k.dim().max(0) as usize;
    let mut report = Report::new(format!("cup product laws over {}", field.name()));

    let mut skew_ok = true;
    let mut skew_pairs = 0usize;
    for p in 0..=dim {
        for q in 0..=dim - p {
            for i in 0..fh.betti(p) {
                for j in 0..fh.betti(q) {
                    let ab = &ring.products[&(p, i, q, j)];
                    let ba = &ring.products[&(q, j, p, i)];
                    let sign_flip = (p * q) % 2 == 1;
                    let equal = ab.iter().zip(ba).all(|(x, y)| {
                        let rhs = if sign_flip { field.neg(y) } else { y.clone() };
                        x == &rhs
                    });
                    if !equal {
                        skew_ok = false;
                    }
                    skew_pairs += 1;
                }
            }
        }
    }
    report.push(
        "graded commutativity on classes",
        skew_ok,
        format!("{} basis pairs", skew_pairs),
    );

    let mut assoc_ok = true;
    let mut assoc_triples = 0usize;
    for p in 0..=dim {
        for q in 0..=dim - p {
            for r in 0..=dim - p - q {
                for phi in fh.cocycle_reps(p) {
                    for theta in fh.cocycle_reps(q) {
                        for psi in fh.cocycle_reps(r) {
                            let left = cup_cochain(
                                field,
                                k,
                                p + q,
                                r,
                                &cup_cochain(field, k, p, q, phi, theta),
                                psi,
                            );
                            let right = cup_cochain(
                                field,
                                k,
                                p,
                                q + r,
                                phi,
                                &cup_cochain(field, k, q, r, theta, psi),
                            );
                            if left != right {
                                assoc_ok = false;
                            }
                            assoc_triples += 1;
                        }
                    }
                }
            }
        }
    }
    report.push(
        "associativity on cochains",
        assoc_ok,
        format!("{} basis triples", assoc_triples),
    );
    Ok(report)
}

/// Generator degrees of a free exterior algebra with the given graded
/// dimensions, if one exists: greedily introduce generators from the bottom
/// and divide out, then confirm the full product expansion.
pub fn exterior_generator_degrees(dims: &[usize]) -> Option<Vec<usize>> {
    if dims.first() != Some(&1) {
        return None;
    }
    let n = dims.len();
    let mut poly: Vec<usize> = vec![1];
    let mut gens = Vec::new();
    for d in 1..n {
        let have = poly.get(d).copied().unwrap_or(0);
        let want = dims[d];
        if want < have {
            return None;
        }
        for _ in 0..want - have {
            gens.push(d);
            // multiply the running polynomial by (1 + t^d), exactly
            let old = std::mem::take(&mut poly);
            poly = vec![0; old.len() + d];
            for (i, &c) in old.iter().enumerate() {
                poly[i] += c;
                poly[i + d] += c;
            }
        }
    }
    let len = poly.len().max(n);
    let matches = (0..len).all(|i| {
        poly.get(i).copied().unwrap_or(0) == dims.get(i).copied().unwrap_or(0)
    });
    if matches {
        Some(gens)
    } else {
        None
    }
}

/// Check that the ring is the free exterior algebra on `n` degree-one
/// generators: binomial Betti numbers and full-rank wedge maps in every
/// degree. Returns the cochain representing the product of all generators.
pub struct ExteriorCheck<F: Field> {
    pub report: Report,
    pub top_cochain: Option<Vec<F::E>>,
}

pub fn verify_exterior_degree_one<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    n: usize,
) -> Result<ExteriorCheck<F>> {
    let cx = chain_complex(k, false);
    let fh = field_homology(field, &cx)?;
    let mut report = Report::new(format!("free exterior ring over {}", field.name()));
    let dim = k.dim().max(0) as usize;

    let mut binomial_ok = fh.betti(1) == n;
    for q in 0..=dim {
        if fh.betti(q) != binomial(n, q) {
            binomial_ok = false;
        }
    }
    report.push(
        "graded dimensions are binomial",
        binomial_ok,
        format!("dims {:?}", fh.dims),
    );
    if !binomial_ok {
        return Ok(ExteriorCheck { report, top_cochain: None });
    }

    let gens: Vec<Vec<F::E>> = fh.cocycle_reps(1).to_vec();
    let mut top_cochain = None;
    for q in 1..=n.min(dim) {
        let mut rows = Vec::new();
        for subset in combinations(n, q) {
            let mut wedge = gens[subset[0]].clone();
            let mut deg = 1;
            for &g in &subset[1..] {
                wedge = cup_cochain(field, k, deg, 1, &wedge, &gens[g]);
                deg += 1;
            }
            rows.push(fh.cocycle_class_coords(q, &wedge));
            if q == n {
                top_cochain = Some(wedge);
            }
        }
        let rank = f_rank(field, &rows);
        report.push(
            format!("wedge map onto degree {}", q),
            rank == binomial(n, q),
            format!("rank {} of {}", rank, binomial(n, q)),
        );
    }
    Ok(ExteriorCheck { report, top_cochain })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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

/// Integral cohomology against integral homology: ranks agree degreewise and
/// the torsion moves up one degree.
pub fn verify_dual_uct(k: &SimplicialComplex) -> Result<Report> {
    let mut report = Report::new("universal coefficients, integral cohomology");
    let h = integral_homology(&chain_complex(k, false)).groups;
    let hc = integral_cohomology_groups(k)?;
    let top = h.len().max(hc.len());
    let mut ok = true;
    for nn in 0..top {
        let hb = h.get(nn).map_or(0, |g| g.betti);
        let cb = hc.get(nn).map_or(0, |g| g.betti);
        let ht: Vec<BigInt> =
            if nn == 0 { Vec::new() } else { h.get(nn - 1).map_or(Vec::new(), |g| g.torsion.clone()) };
        let ct = hc.get(nn).map_or(Vec::new(), |g| g.torsion.clone());
        if hb != cb || ht != ct {
            ok = false;
        }
    }
    report.push(
        "ranks equal, torsion shifted up one degree",
        ok,
        format!("checked degrees 0..{}", top.max(1) - 1),
    );
    Ok(report)
}
