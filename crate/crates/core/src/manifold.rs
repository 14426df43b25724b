//! Closed pseudomanifold structure: orientation by sign propagation with an
//! independent rank cross-check, fundamental classes, mapping degree, the
//! top-pairing nondegeneracy check, parity constraints on the alternating
//! sum, and complement separation for embedded spheres.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cohomology::{cap, cup_cochain, kronecker};
use crate::complex::{SimplicialComplex, SimplicialMap};
use crate::error::Error;
use crate::exactlinalg::{f_rank, rank_over_field, Field};
use crate::homology::{
    chain_complex, chain_map_matrix, euler_three_ways, field_homology, homology_groups,
    integral_homology, Coefficients,
};
use crate::report::Report;
use crate::Result;

/// Dimension of a closed pseudomanifold: pure, every ridge in exactly two
/// facets, facets connected through shared ridges.
pub fn closed_pseudomanifold_dim(k: &SimplicialComplex) -> Result<usize> {
    let n = pure_dim(k)?;
    let (counts, _) = ridge_cofacets(k, n);
    for (i, c) in counts.iter().enumerate() {
        if *c != 2 {
            let toks = k.tokens_of(&k.simplices(n - 1)[i]);
            return Err(Error::NotPseudomanifold(format!(
                "ridge {{{}}} lies in {} facets",
                toks.join(","),
                c
            )));
        }
    }
    if !facet_graph_connected(k, n) {
        return Err(Error::NotPseudomanifold("facets do not connect through ridges".into()));
    }
    Ok(n)
}

fn pure_dim(k: &SimplicialComplex) -> Result<usize> {
    if k.dim() < 1 {
        return Err(Error::NotPseudomanifold("dimension below one".into()));
    }
    let n = k.dim() as usize;
    for s in k.maximal_simplices() {
        if s.len() != n + 1 {
            return Err(Error::NotPseudomanifold(format!(
                "maximal simplex {{{}}} has dimension {}",
                k.tokens_of(&s).join(","),
                s.len() - 1
            )));
        }
    }
    Ok(n)
}

/// For each ridge: how many facets contain it, and which.
fn ridge_cofacets(k: &SimplicialComplex, n: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let ridges = k.simplices(n - 1);
    let mut counts = vec![0usize; ridges.len()];
    let mut cof = vec![Vec::new(); ridges.len()];
    for (j, s) in k.simplices(n).iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let r = k.simplex_index(n - 1, &face).expect("closed under faces");
            counts[r] += 1;
            cof[r].push(j);
        }
    }
    (counts, cof)
}

fn facet_graph_connected(k: &SimplicialComplex, n: usize) -> bool {
    let facets = k.simplices(n).len();
    if facets == 0 {
        return false;
    }
    let (_, cof) = ridge_cofacets(k, n);
    let mut adj = vec![Vec::new(); facets];
    for list in &cof {
        for &a in list {
            for &b in list {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
    }
    let mut seen = vec![false; facets];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(f) = stack.pop() {
        for &g in &adj[f] {
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The boundary subcomplex: closure of the ridges lying in exactly one
/// facet. Ridges in more than two facets are rejected.
pub fn boundary_subcomplex(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = pure_dim(k)?;
    let (counts, _) = ridge_cofacets(k, n);
    let mut boundary = Vec::new();
    for (i, c) in counts.iter().enumerate() {
        match c {
            1 => boundary.push(k.tokens_of(&k.simplices(n - 1)[i])),
            2 => {}
            _ => {
                return Err(Error::NotPseudomanifold(format!(
                    "ridge in {} facets",
                    c
                )))
            }
        }
    }
    SimplicialComplex::build_complex(&boundary)
}

/// Orientation signs per facet, by propagation from the least facet across
/// shared ridges. The result is cross-checked against the top homology rank;
/// disagreement is an engine error. Ridges on the boundary (one facet) are
/// allowed only with `allow_boundary`.
pub fn orient_signs(k: &SimplicialComplex, allow_boundary: bool) -> Result<Vec<i32>> {
    let n = pure_dim(k)?;
    let (counts, cof) = ridge_cofacets(k, n);
    for c in &counts {
        let ok = *c == 2 || (allow_boundary && *c == 1);
        if !ok {
            return Err(Error::NotPseudomanifold(format!("ridge in {} facets", c)));
        }
    }
    if !facet_graph_connected(k, n) {
        return Err(Error::NotPseudomanifold("facets do not connect through ridges".into()));
    }
    let cx = chain_complex(k, false);
    let dn = cx.boundary(n);
    let facets = k.simplices(n).len();
    let mut adj = vec![Vec::new(); facets];
    for (r, list) in cof.iter().enumerate() {
        if list.len() == 2 {
            adj[list[0]].push((r, list[1]));
            adj[list[1]].push((r, list[0]));
        }
    }
    let mut sign = vec![0i32; facets];
    sign[0] = 1;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut consistent = true;
    'outer: while let Some(f) = queue.pop_front() {
        for &(r, other) in &adj[f] {
            let cf = dn.get(r, f);
            let cg = dn.get(r, other);
            let c = if cf.is_negative() == cg.is_negative() { -1 } else { 1 };
            let wanted = sign[f] * c;
            if sign[other] == 0 {
                sign[other] = wanted;
                queue.push_back(other);
            } else if sign[other] != wanted {
                consistent = false;
                break 'outer;
            }
        }
    }
    // independent check through the rank of the top homology group
    if !allow_boundary {
        let top_rank = cx.rank(n) - rank_over_field(&dn, 0)?;
        if consistent != (top_rank == 1) {
            return Err(Error::InternalMismatch(format!(
                "sign propagation {} but top homology rank {}",
                if consistent { "succeeded" } else { "failed" },
                top_rank
            )));
        }
    }
    if !consistent {
        return Err(Error::NotOrientable);
    }
    if !allow_boundary {
        // the signed facet sum must be a cycle
        let z: Vec<BigInt> = sign.iter().map(|&s| BigInt::from(s)).collect();
        let bd = dn.mat_vec(&z);
        if bd.iter().any(|v| !v.is_zero()) {
            return Err(Error::InternalMismatch("oriented facet sum is not a cycle".into()));
        }
    }
    Ok(sign)
}

/// The fundamental cycle of an oriented closed pseudomanifold, as a top
/// chain vector.
pub fn fundamental_class(k: &SimplicialComplex) -> Result<Vec<BigInt>> {
    closed_pseudomanifold_dim(k)?;
    Ok(orient_signs(k, false)?.into_iter().map(BigInt::from).collect())
}

/// Fundamental cycle with field entries; in characteristic two every closed
/// pseudomanifold carries the all-ones class.
pub fn fundamental_class_field<F: Field>(field: &F, k: &SimplicialComplex) -> Result<Vec<F::E>> {
    let n = closed_pseudomanifold_dim(k)?;
    let two = field.add(&field.one(), &field.one());
    if field.is_zero(&two) {
        return Ok(vec![field.one(); k.simplices(n).len()]);
    }
    Ok(fundamental_class(k)?
        .iter()
        .map(|v| field.from_bigint(v))
        .collect())
}

/// Mapping degree between oriented closed pseudomanifolds of one dimension.
pub fn degree(f: &SimplicialMap) -> Result<BigInt> {
    let nk = closed_pseudomanifold_dim(f.source())?;
    let nl = closed_pseudomanifold_dim(f.target())?;
    if nk != nl {
        return Err(Error::DimensionMismatch(format!(
            "source dimension {} target dimension {}",
            nk, nl
        )));
    }
    let zk = fundamental_class(f.source())?;
    let zl = fundamental_class(f.target())?;
    let ih = integral_homology(&chain_complex(f.target(), false));
    if ih.free_rank(nl) != 1 {
        return Err(Error::InternalMismatch("top homology rank is not one".into()));
    }
    let img = chain_map_matrix(f, nk).mat_vec(&zk);
    let a = ih.class_free_coords(nl, &img)?;
    let b = ih.class_free_coords(nl, &zl)?;
    if !(b[0].magnitude() == BigInt::one().magnitude()) {
        return Err(Error::InternalMismatch("fundamental class is not a generator".into()));
    }
    Ok(&a[0] * &b[0])
}

/// Ranks of the top-pairing matrices (a, b) -> <a cup b, fundamental class>
/// in complementary degrees. Full rank everywhere, with mirrored dimensions.
pub fn poincare_pairing_report<F: Field>(field: &F, k: &SimplicialComplex) -> Result<Report> {
    let n = closed_pseudomanifold_dim(k)?;
    let zeta = fundamental_class_field(field, k)?;
    let fh = field_homology(field, &chain_complex(k, false))?;
    let mut report = Report::new(format!("top pairing over {}", field.name()));
    let mut palindrome = true;
    for q in 0..=n {
        if fh.betti(q) != fh.betti(n - q) {
            palindrome = false;
        }
    }
    report.push(
        "graded dimensions are palindromic",
        palindrome,
        format!("dims {:?}", fh.dims),
    );
    for q in 0..=n {
        let bq = fh.betti(q);
        let bnq = fh.betti(n - q);
        let mut m = Vec::with_capacity(bq);
        for phi in fh.cocycle_reps(q) {
            let mut row = Vec::with_capacity(bnq);
            for theta in fh.cocycle_reps(n - q) {
                let cup = cup_cochain(field, k, q, n - q, phi, theta);
                row.push(kronecker(field, &cup, &zeta));
            }
            m.push(row);
        }
        let rank = f_rank(field, &m);
        report.push(
            format!("pairing H^{} x H^{} nondegenerate", q, n - q),
            bq == bnq && rank == bq,
            format!("rank {} of {}", rank, bq),
        );
        // the same statement through the cap product: capping the
        // fundamental class is an isomorphism onto the complementary degree
        let dual: Vec<Vec<F::E>> = fh
            .cocycle_reps(q)
            .iter()
            .map(|phi| fh.class_coords(n - q, &cap(field, k, n, &zeta, q, phi)))
            .collect();
        let drank = f_rank(field, &dual);
        report.push(
            format!("capping the top class maps H^{} onto H_{}", q, n - q),
            drank == bq && drank == bnq,
            format!("rank {} of {}", drank, bq),
        );
    }
    Ok(report)
}

/// Parity constraints on the alternating sum: zero in odd dimensions, even
/// in dimensions 2 mod 4 given an orientation, and even on the boundary of
/// a complex with orientable interior.
pub fn parity_report(k: &SimplicialComplex) -> Result<Report> {
    let n = pure_dim(k)?;
    let boundary = boundary_subcomplex(k)?;
    let mut report = Report::new("parity of the alternating sum");
    if boundary.dim() < 0 {
        closed_pseudomanifold_dim(k)?;
        let e = euler_three_ways(k)?.value()?;
        if n % 2 == 1 {
            report.push(
                "odd dimension forces zero",
                e == 0,
                format!("dimension {}, sum {}", n, e),
            );
        } else if n % 4 == 2 {
            match orient_signs(k, false) {
                Ok(_) => report.push(
                    "dimension 2 mod 4 with orientation forces even",
                    e % 2 == 0,
                    format!("dimension {}, sum {}", n, e),
                ),
                Err(Error::NotOrientable) => report.push(
                    "no constraint without orientation",
                    true,
                    format!("dimension {}, sum {}", n, e),
                ),
                Err(e) => return Err(e),
            }
        } else {
            report.push(
                "no parity constraint in this dimension",
                true,
                format!("dimension {}, sum {}", n, e),
            );
        }
    } else {
        match orient_signs(k, true) {
            Ok(_) => {
                let e = euler_three_ways(&boundary)?.value()?;
                report.push(
                    "orientable interior forces even boundary sum",
                    e % 2 == 0,
                    format!("boundary sum {}", e),
                );
            }
            Err(Error::NotOrientable) => report.push(
                "no constraint without interior orientation",
                true,
                String::new(),
            ),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Which embedded sphere to cut out of the double subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddedSphere {
    Equator,
    FacetBoundary,
}

/// Separation of the sphere by an embedded codimension-one sphere: the
/// complement of the full subcomplex has exactly two components. The count
/// is cross-checked against the rank of degree-zero homology.
pub fn separation_report(n: usize, which: EmbeddedSphere) -> Result<Report> {
    if n < 2 {
        return Err(Error::RangeError("separation needs dimension at least 2".into()));
    }
    let sphere = SimplicialComplex::builtin(&format!("sphere:{}", n))?;
    let (ambient, sub) = match which {
        EmbeddedSphere::Equator => {
            // boundary of one facet, subdivided along with the sphere
            let facet: Vec<String> =
                sphere.vertices()[..=n].iter().cloned().collect();
            let mut faces = Vec::new();
            for i in 0..=n {
                let mut f = facet.clone();
                f.remove(i);
                faces.push(f);
            }
            let sub0 = SimplicialComplex::build_complex(&faces)?;
            (
                sphere.barycentric_subdivision().barycentric_subdivision(),
                sub0.barycentric_subdivision().barycentric_subdivision(),
            )
        }
        EmbeddedSphere::FacetBoundary => {
            // boundary of the least facet of the subdivided sphere
            let sd = sphere.barycentric_subdivision();
            let tau = sd.simplices(n)[0].clone();
            let mut faces = Vec::new();
            for i in 0..tau.len() {
                let mut f = tau.clone();
                f.remove(i);
                faces.push(sd.tokens_of(&f));
            }
            let sub1 = SimplicialComplex::build_complex(&faces)?;
            (sd.barycentric_subdivision(), sub1.barycentric_subdivision())
        }
    };
    if !sub.is_subcomplex_of(&ambient) {
        return Err(Error::BadEmbedding("sphere is not a subcomplex".into()));
    }
    // the cut locus must be a sphere of codimension one
    let reduced = homology_groups(&sub, Coefficients::Z, true)?;
    let sphere_like = reduced
        .iter()
        .enumerate()
        .all(|(q, g)| if q == n - 1 { g.betti == 1 && g.torsion.is_empty() } else { g.is_trivial() });
    if !sphere_like {
        return Err(Error::BadEmbedding("cut locus is not a sphere".into()));
    }
    let complement = ambient.full_subcomplex_complement(&sub)?;
    let components = complement.components_count();
    let b0 = integral_homology(&chain_complex(&complement, false)).free_rank(0);
    if components != b0 {
        return Err(Error::InternalMismatch(format!(
            "component count {} vs degree-zero rank {}",
            components, b0
        )));
    }
    let mut report = Report::new("complement separation");
    report.push(
        "complement has exactly two components",
        components == 2,
        format!("{} components", components),
    );
    Ok(report)
}
