//! Alternating traces of self-maps, the chain-level trace identity, fixed
//! point certificates, and coincidence numbers of parallel map pairs
//! through the top pairing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cohomology::{cup_cochain, kronecker};
use crate::complex::SimplicialMap;
use crate::error::Error;
use crate::exactlinalg::{
    bigint_to_u64, f_from_int, f_mul, f_solve_multi, f_trace, Field, IntMatrix, PrimeField,
    Rationals,
};
use crate::homology::{
    chain_complex, chain_map_matrix, field_homology, induced_map_field, FieldHomology,
};
use crate::manifold::{closed_pseudomanifold_dim, degree, fundamental_class_field};
use crate::report::Report;
use crate::Result;

fn int_trace(m: &IntMatrix) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..m.rows().min(m.cols()) {
        acc += m.get(i, i);
    }
    acc
}

/// Alternating trace of the maps induced on rational homology.
pub fn lefschetz_number(f: &SimplicialMap) -> Result<BigInt> {
    if !f.is_self_map() {
        return Err(Error::NotSelfMap);
    }
    let k = f.source();
    if k.dim() < 0 {
        return Ok(BigInt::zero());
    }
    let cx = chain_complex(k, false);
    let fh = field_homology(&Rationals, &cx)?;
    let mut acc = BigRational::zero();
    for q in 0..=k.dim() as usize {
        let m = induced_map_field(&Rationals, f, q, &fh, &fh);
        let t = f_trace(&Rationals, &m);
        if q % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    if !acc.is_integer() {
        return Err(Error::InternalMismatch("trace is not an integer".into()));
    }
    Ok(acc.to_integer())
}

/// Alternating trace at the chain level: the signed count of simplices a
/// map sends onto themselves.
pub fn chain_trace(f: &SimplicialMap) -> Result<BigInt> {
    if !f.is_self_map() {
        return Err(Error::NotSelfMap);
    }
    let mut acc = BigInt::zero();
    let top = f.source().dim();
    for q in 0..=top.max(0) as usize {
        let t = int_trace(&chain_map_matrix(f, q));
        if q % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

fn field_alternating_trace<F: Field>(
    field: &F,
    f: &SimplicialMap,
    fh: &FieldHomology<F>,
) -> F::E {
    let mut acc = field.zero();
    let top = f.source().dim().max(0) as usize;
    for q in 0..=top {
        let m = induced_map_field(field, f, q, fh, fh);
        let t = f_trace(field, &m);
        if q % 2 == 0 {
            acc = field.add(&acc, &t);
        } else {
            acc = field.sub(&acc, &t);
        }
    }
    acc
}

/// The chain-level trace must equal the homology-level trace, over the
/// rationals and over small prime fields. Returns the number and the
/// comparison record.
pub fn hopf_trace_report(f: &SimplicialMap) -> Result<(BigInt, Report)> {
    let chain = chain_trace(f)?;
    let hom = lefschetz_number(f)?;
    let mut report = Report::new("alternating trace at chain and homology level");
    report.push(
        "chain trace equals trace on rational homology",
        chain == hom,
        format!("chain {} homology {}", chain, hom),
    );
    let cx = chain_complex(f.source(), false);
    for p in [2u64, 3] {
        let fp = PrimeField::new(p)?;
        let fh = field_homology(&fp, &cx)?;
        let t = field_alternating_trace(&fp, f, &fh);
        let r = bigint_to_u64(&((&chain % p + p) % p))?;
        report.push(
            format!("chain trace matches homology trace mod {}", p),
            t == r,
            format!("chain {} homology {} (mod {})", r, fp.display(&t), p),
        );
    }
    Ok((hom, report))
}

/// A nonzero alternating trace certifies a fixed simplex for every
/// simplicial approximation of the map.
pub fn fixed_point_certificate(f: &SimplicialMap) -> Result<(BigInt, String)> {
    let l = lefschetz_number(f)?;
    let statement = if l.is_zero() {
        "trace zero: no fixed point is forced".to_string()
    } else {
        format!(
            "trace {} is nonzero: the map has a fixed simplex in every simplicial approximation",
            l
        )
    };
    Ok((l, statement))
}

fn pullback_cochain<F: Field>(field: &F, m: &IntMatrix, phi: &[F::E]) -> Vec<F::E> {
    assert_eq!(m.rows(), phi.len());
    let mf = f_from_int(field, m);
    (0..m.cols())
        .map(|j| {
            let mut acc = field.zero();
            for (i, p) in phi.iter().enumerate() {
                if !field.is_zero(&mf[i][j]) && !field.is_zero(p) {
                    acc = field.add(&acc, &field.mul(&mf[i][j], p));
                }
            }
            acc
        })
        .collect()
}

/// Coincidence number of a parallel pair f, g between oriented closed
/// pseudomanifolds of one dimension. In each degree p the second map is
/// turned into a wrong-way map on cohomology through the top pairing, and
/// the alternating trace of the compositions is taken.
pub fn coincidence_number(f: &SimplicialMap, g: &SimplicialMap) -> Result<BigInt> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::InvalidMap("coincidence needs a parallel pair of maps".into()));
    }
    let k = f.source();
    let l = f.target();
    let nk = closed_pseudomanifold_dim(k)?;
    let nl = closed_pseudomanifold_dim(l)?;
    if nk != nl {
        return Err(Error::DimensionMismatch(format!(
            "source dimension {} target dimension {}",
            nk, nl
        )));
    }
    let n = nk;
    let field = Rationals;
    let zk = fundamental_class_field(&field, k)?;
    let zl = fundamental_class_field(&field, l)?;
    let fhk = field_homology(&field, &chain_complex(k, false))?;
    let fhl = field_homology(&field, &chain_complex(l, false))?;
    let mut acc = BigRational::zero();
    for p in 0..=n {
        let alphas = fhk.cocycle_reps(p);
        let gammas = fhl.cocycle_reps(p);
        let betas = fhl.cocycle_reps(n - p);
        if alphas.is_empty() || gammas.is_empty() {
            continue;
        }
        if gammas.len() != betas.len() {
            return Err(Error::InternalMismatch("pairing matrix is not square".into()));
        }
        // Q[k][j] = <gamma_k cup beta_j, zeta_L>
        let q: Vec<Vec<BigRational>> = gammas
            .iter()
            .map(|gk| {
                betas
                    .iter()
                    .map(|bj| {
                        let cup = cup_cochain(&field, l, p, n - p, gk, bj);
                        kronecker(&field, &cup, &zl)
                    })
                    .collect()
            })
            .collect();
        // M[i][j] = <alpha_i cup g*(beta_j), zeta_K>
        let gm = chain_map_matrix(g, n - p);
        let m: Vec<Vec<BigRational>> = alphas
            .iter()
            .map(|ai| {
                betas
                    .iter()
                    .map(|bj| {
                        let gb = pullback_cochain(&field, &gm, bj);
                        let cup = cup_cochain(&field, k, p, n - p, ai, &gb);
                        kronecker(&field, &cup, &zk)
                    })
                    .collect()
            })
            .collect();
        // solve Q^T W = M^T; the wrong-way matrix of g is W with
        // W[k][i] the gamma_k coordinate of the image of alpha_i
        let qt: Vec<Vec<BigRational>> = (0..betas.len())
            .map(|j| (0..gammas.len()).map(|kk| q[kk][j].clone()).collect())
            .collect();
        let rhs: Vec<Vec<BigRational>> = (0..alphas.len())
            .map(|i| (0..betas.len()).map(|j| m[i][j].clone()).collect())
            .collect();
        let sols = f_solve_multi(&field, &qt, &rhs)
            .ok_or_else(|| Error::InternalMismatch("top pairing is degenerate".into()))?;
        let w: Vec<Vec<BigRational>> = (0..gammas.len())
            .map(|kk| (0..alphas.len()).map(|i| sols[i][kk].clone()).collect())
            .collect();
        // matrix of f^* from H^p(L) to H^p(K)
        let fm = chain_map_matrix(f, p);
        let fstar_cols: Vec<Vec<BigRational>> = gammas
            .iter()
            .map(|gk| fhk.cocycle_class_coords(p, &pullback_cochain(&field, &fm, gk)))
            .collect();
        let fstar: Vec<Vec<BigRational>> = (0..alphas.len())
            .map(|i| fstar_cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let comp = f_mul(&field, &w, &fstar);
        let t = f_trace(&field, &comp);
        if p % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    if !acc.is_integer() {
        return Err(Error::InternalMismatch("coincidence trace is not an integer".into()));
    }
    Ok(acc.to_integer())
}

/// Identity checks tying coincidence numbers to traces and degrees.
pub fn coincidence_identities_report(
    f: &SimplicialMap,
    g: &SimplicialMap,
    h: &SimplicialMap,
) -> Result<Report> {
    let n = closed_pseudomanifold_dim(f.source())?;
    let mut report = Report::new("coincidence identities");
    if f.is_self_map() {
        let id = SimplicialMap::identity(f.source());
        let against_identity = coincidence_number(f, &id)?;
        let trace = lefschetz_number(f)?;
        report.push(
            "pair with the identity recovers the trace",
            against_identity == trace,
            format!("{} vs {}", against_identity, trace),
        );
    }
    let fg = coincidence_number(f, g)?;
    let gf = coincidence_number(g, f)?;
    let swapped = if n % 2 == 0 { gf.clone() } else { -gf.clone() };
    report.push(
        "swapping the pair flips by the dimension sign",
        fg == swapped,
        format!("({}, {}) in dimension {}", fg, gf, n),
    );
    let fh_pair = (f.compose_after(h)?, g.compose_after(h)?);
    let d = degree(h)?;
    let lhs = coincidence_number(&fh_pair.0, &fh_pair.1)?;
    let rhs = &d * &fg;
    report.push(
        "precomposition scales by the degree",
        lhs == rhs,
        format!("{} vs {} * {}", lhs, d, fg),
    );
    Ok(report)
}
