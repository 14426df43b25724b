//! Edge-path fundamental group: presentation from a spanning tree, the
//! abelianization, and the count of homomorphisms into cyclic groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::exactlinalg::{smith_normal_form, IntMatrix};
use crate::homology::{chain_complex, integral_homology, HomologyGroup};
use crate::report::Report;
use crate::Result;

/// Finite presentation; relator words are (generator, exponent) factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i32)>>,
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens = self.generators.join(", ");
        let words: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&(g, e)| {
                        if e == 1 {
                            self.generators[g].clone()
                        } else {
                            format!("{}^{}", self.generators[g], e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "<{} | {}>", gens, words.join("; "))
    }
}

/// Edge-path presentation: one generator per edge outside a breadth-first
/// spanning tree from the least vertex, one relator per triangle.
pub fn edge_path_group(k: &SimplicialComplex) -> Result<GroupPresentation> {
    let order: Vec<u32> = (0..k.n_vertices() as u32).collect();
    edge_path_group_with_tree(k, &order)
}

/// Same construction with the tree grown in a caller-chosen vertex priority;
/// different trees give isomorphic groups.
pub fn edge_path_group_with_tree(
    k: &SimplicialComplex,
    priority: &[u32],
) -> Result<GroupPresentation> {
    let tree = k.spanning_tree_with_priority(priority)?;
    let tree: std::collections::BTreeSet<(u32, u32)> = tree.into_iter().collect();
    let edges = k.simplices(1);
    let mut gen_of_edge: Vec<Option<usize>> = vec![None; edges.len()];
    let mut generators = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if !tree.contains(&(e[0], e[1])) {
            gen_of_edge[i] = Some(generators.len());
            generators.push(format!(
                "g_{{{},{}}}",
                k.vertex_token(e[0]),
                k.vertex_token(e[1])
            ));
        }
    }
    let mut relators = Vec::new();
    for s in k.simplices(2) {
        let (a, b, c) = (s[0], s[1], s[2]);
        let mut word = Vec::new();
        for (u, v, exp) in [(a, b, 1), (b, c, 1), (a, c, -1)] {
            let idx = k
                .simplex_index(1, &[u, v])
                .expect("edge of a triangle");
            if let Some(g) = gen_of_edge[idx] {
                word.push((g, exp));
            }
        }
        if !word.is_empty() {
            relators.push(word);
        }
    }
    Ok(GroupPresentation { generators, relators })
}

/// Abelianization from the exponent-sum matrix of the relators.
pub fn abelianization(p: &GroupPresentation) -> HomologyGroup {
    let mut m = IntMatrix::zero(p.generators.len(), p.relators.len());
    for (j, word) in p.relators.iter().enumerate() {
        for &(g, e) in word {
            let cur = m.get(g, j);
            m.set(g, j, cur + BigInt::from(e));
        }
    }
    let snf = smith_normal_form(&m);
    let r = snf.rank();
    let torsion: Vec<BigInt> = snf.invariant_factors[..r]
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    HomologyGroup { degree: 1, betti: p.generators.len() - r, torsion }
}

/// The abelianized edge-path group against first homology.
pub fn verify_hurewicz(k: &SimplicialComplex) -> Result<Report> {
    let mut report = Report::new("abelianized fundamental group vs first homology");
    let pres = edge_path_group(k)?;
    let ab = abelianization(&pres);
    let h1 = integral_homology(&chain_complex(k, false)).group(1);
    let ok = ab.betti == h1.betti && ab.torsion == h1.torsion;
    report.push(
        "isomorphic as abelian groups",
        ok,
        format!("abelianization {} vs homology {}", ab, h1),
    );
    Ok(report)
}

/// Number of homomorphisms from the abelianized group into Z/k.
pub fn torsion_count(ab: &HomologyGroup, k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::RangeError("modulus must be positive".into()));
    }
    let kb = BigInt::from(k);
    let mut count = kb.pow(ab.betti as u32);
    for m in &ab.torsion {
        count *= kb.gcd(m);
    }
    Ok(count)
}
