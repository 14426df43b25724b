//! Finite abstract simplicial complexes and simplicial maps.
//!
//! A complex owns a globally ordered vertex set (lexicographic on tokens,
//! fixed at construction) and stores, per dimension, all simplices as
//! strictly increasing vertex-id tuples. Everything downstream (orientation
//! signs, cup products, deterministic output) leans on that order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    /// simplices[d] is sorted; every tuple is strictly increasing.
    simplices: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { vertices: Vec::new(), simplices: Vec::new() }
    }

    /// Face closure of the given simplices. Input tuples are token sets;
    /// duplicates across inputs are fine, duplicates inside one input are an
    /// error.
    pub fn build_complex<S: AsRef<str>>(maximal: &[Vec<S>]) -> Result<Self> {
        for s in maximal {
            if s.is_empty() {
                return Err(Error::Parse("empty simplex in input".to_string()));
            }
            let mut seen = BTreeSet::new();
            for t in s {
                if !seen.insert(t.as_ref()) {
                    return Err(Error::DuplicateVertexInSimplex(t.as_ref().to_string()));
                }
            }
        }
        let mut vertices: Vec<String> = maximal
            .iter()
            .flat_map(|s| s.iter().map(|t| t.as_ref().to_string()))
            .collect();
        vertices.sort();
        vertices.dedup();
        let id: BTreeMap<&str, u32> =
            vertices.iter().enumerate().map(|(i, t)| (t.as_str(), i as u32)).collect();
        let mut sets: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for s in maximal {
            let mut ids: Vec<u32> = s.iter().map(|t| id[t.as_ref()]).collect();
            ids.sort_unstable();
            insert_with_faces(&mut sets, &ids);
        }
        Ok(SimplicialComplex {
            vertices,
            simplices: sets.into_iter().map(|set| set.into_iter().collect()).collect(),
        })
    }

    /// Internal: closure construction from id tuples of an existing complex,
    /// carrying over the token names.
    fn from_id_simplices(&self, sims: &[Vec<u32>]) -> Self {
        let tokens: Vec<Vec<String>> =
            sims.iter().map(|s| s.iter().map(|&v| self.vertices[v as usize].clone()).collect()).collect();
        SimplicialComplex::build_complex(&tokens).expect("internal tuples are valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, token: &str) -> Option<u32> {
        self.vertices.binary_search_by(|t| t.as_str().cmp(token)).ok().map(|i| i as u32)
    }

    pub fn vertex_token(&self, id: u32) -> &str {
        &self.vertices[id as usize]
    }

    pub fn dim(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn simplex_index(&self, d: usize, tuple: &[u32]) -> Option<usize> {
        self.simplices.get(d)?.binary_search_by(|s| s.as_slice().cmp(tuple)).ok()
    }

    pub fn has_ids(&self, tuple: &[u32]) -> bool {
        if tuple.is_empty() {
            return false;
        }
        self.simplex_index(tuple.len() - 1, tuple).is_some()
    }

    pub fn has_tokens<S: AsRef<str>>(&self, toks: &[S]) -> bool {
        let mut ids = Vec::with_capacity(toks.len());
        for t in toks {
            match self.vertex_id(t.as_ref()) {
                Some(i) => ids.push(i),
                None => return false,
            }
        }
        ids.sort_unstable();
        self.has_ids(&ids)
    }

    pub fn tokens_of(&self, tuple: &[u32]) -> Vec<String> {
        tuple.iter().map(|&v| self.vertices[v as usize].clone()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic_f(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Simplices with no proper coface, ordered by dimension then tuple.
    pub fn maximal_simplices(&self) -> Vec<Vec<u32>> {
        let mut non_maximal: Vec<BTreeSet<usize>> =
            self.simplices.iter().map(|_| BTreeSet::new()).collect();
        for d in 1..self.simplices.len() {
            for s in &self.simplices[d] {
                for k in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(k);
                    if let Some(i) = self.simplex_index(d - 1, &face) {
                        non_maximal[d - 1].insert(i);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (d, sims) in self.simplices.iter().enumerate() {
            for (i, s) in sims.iter().enumerate() {
                if !non_maximal[d].contains(&i) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    pub fn maximal_simplices_tokens(&self) -> Vec<Vec<String>> {
        self.maximal_simplices().iter().map(|s| self.tokens_of(s)).collect()
    }

    /// Number of connected components (isolated vertices count).
    pub fn components_count(&self) -> usize {
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0] as usize), find(&mut parent, e[1] as usize));
            if a != b {
                parent[a] = b;
            }
        }
        let mut roots = BTreeSet::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            roots.insert(r);
        }
        roots.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components_count() == 1
    }

    /// Vertex-id labelling of components, for component extraction.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.n_vertices();
        let mut label = vec![usize::MAX; n];
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for e in self.simplices(1) {
            adj[e[0] as usize].push(e[1]);
            adj[e[1] as usize].push(e[0]);
        }
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if label[w as usize] == usize::MAX {
                        label[w as usize] = next;
                        stack.push(w as usize);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Every simplex of self is a simplex of `ambient` (matched by tokens).
    pub fn is_subcomplex_of(&self, ambient: &SimplicialComplex) -> bool {
        for d in 0..self.simplices.len() {
            for s in &self.simplices[d] {
                let toks = self.tokens_of(s);
                if !ambient.has_tokens(&toks) {
                    return false;
                }
            }
        }
        true
    }

    /// The full subcomplex on a set of vertex tokens: every simplex of self
    /// whose vertices all lie in the set.
    pub fn full_subcomplex<S: AsRef<str>>(&self, verts: &[S]) -> Self {
        let keep: BTreeSet<u32> = verts.iter().filter_map(|t| self.vertex_id(t.as_ref())).collect();
        let mut sims = Vec::new();
        for d in 0..self.simplices.len() {
            for s in &self.simplices[d] {
                if s.iter().all(|v| keep.contains(v)) {
                    sims.push(s.clone());
                }
            }
        }
        self.from_id_simplices(&sims)
    }

    /// The named corpus complexes.
    pub fn builtin(name: &str) -> Result<Self> {
        if let Some(rest) = name.strip_prefix("sphere:") {
            let n: usize = rest.parse().map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
            return Ok(sphere(n));
        }
        if let Some(rest) = name.strip_prefix("torus:") {
            let n: usize = rest.parse().map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
            if n == 0 {
                return Err(Error::UnknownBuiltin(name.to_string()));
            }
            let circle = sphere(1);
            let mut out = circle.clone();
            for _ in 1..n {
                out = out.product(&circle);
            }
            return Ok(out);
        }
        match name {
            "torus" => {
                // 7-vertex vertex-transitive triangulation: two Z/7 orbits
                let mut facets = Vec::new();
                for i in 0u32..7 {
                    facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
                    facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
                }
                let toks: Vec<Vec<String>> = facets
                    .iter()
                    .map(|f| f.iter().map(|v| v.to_string()).collect())
                    .collect();
                SimplicialComplex::build_complex(&toks)
            }
            "rp2" => {
                // minimal 6-vertex projective plane (icosahedron antipodal quotient)
                let facets = [
                    [1, 2, 4],
                    [1, 2, 6],
                    [1, 3, 5],
                    [1, 3, 6],
                    [1, 4, 5],
                    [2, 3, 4],
                    [2, 3, 5],
                    [2, 5, 6],
                    [3, 4, 6],
                    [4, 5, 6],
                ];
                let toks: Vec<Vec<String>> = facets
                    .iter()
                    .map(|f| f.iter().map(|v| v.to_string()).collect())
                    .collect();
                SimplicialComplex::build_complex(&toks)
            }
            "klein" => {
                // 3x3 grid, wrapped horizontally; the top row glues to the
                // bottom row through the flip i -> -i, which reverses
                // orientation.
                let t = |i: u32, j: u32| format!("{}{}", i % 3, j);
                let up = |i: u32, j: u32| if j == 3 { ((3 - i % 3) % 3, 0) } else { (i % 3, j) };
                let mut facets = Vec::new();
                for j in 0u32..3 {
                    for i in 0u32..3 {
                        let a = (i, j);
                        let b = (i + 1, j);
                        let c = up(i, j + 1);
                        let d = up(i + 1, j + 1);
                        facets.push(vec![t(a.0, a.1), t(b.0, b.1), t(d.0, d.1)]);
                        facets.push(vec![t(a.0, a.1), t(d.0, d.1), t(c.0, c.1)]);
                    }
                }
                SimplicialComplex::build_complex(&facets)
            }
            "moebius" => {
                // classic 5-vertex band
                let mut facets = Vec::new();
                for i in 0u32..5 {
                    facets.push(vec![
                        i.to_string(),
                        ((i + 1) % 5).to_string(),
                        ((i + 2) % 5).to_string(),
                    ]);
                }
                SimplicialComplex::build_complex(&facets)
            }
            "cylinder" => {
                // two triangle rims joined by a band of six triangles
                let a = |i: u32| format!("a{}", i % 3);
                let b = |i: u32| format!("b{}", i % 3);
                let mut facets = Vec::new();
                for i in 0u32..3 {
                    facets.push(vec![a(i), a(i + 1), b(i + 1)]);
                    facets.push(vec![a(i), b(i + 1), b(i)]);
                }
                SimplicialComplex::build_complex(&facets)
            }
            _ => Err(Error::UnknownBuiltin(name.to_string())),
        }
    }

    /// All simplices of self, plus apex joined to each, plus the apex itself.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        if self.vertex_id(apex).is_some() {
            return Err(Error::ApexCollision(apex.to_string()));
        }
        let mut maximal: Vec<Vec<String>> = self
            .maximal_simplices()
            .iter()
            .map(|s| {
                let mut toks = self.tokens_of(s);
                toks.push(apex.to_string());
                toks
            })
            .collect();
        if maximal.is_empty() {
            maximal.push(vec![apex.to_string()]);
        }
        SimplicialComplex::build_complex(&maximal)
    }

    /// Vertices are the simplices of self; simplices are chains under the
    /// face order. Vertex tokens are bracketed joins of the underlying
    /// vertex tokens, so iterated subdivision stays unambiguous.
    pub fn barycentric_subdivision(&self) -> Self {
        let token = |s: &[u32]| -> String { format!("[{}]", self.tokens_of(s).join(",")) };
        let mut maximal: Vec<Vec<String>> = Vec::new();
        for top in self.maximal_simplices() {
            let k = top.len();
            let mut perm: Vec<usize> = (0..k).collect();
            permutations(&mut perm, 0, &mut |p| {
                let mut flag = Vec::with_capacity(k);
                let mut prefix: Vec<u32> = Vec::with_capacity(k);
                for &ix in p {
                    prefix.push(top[ix]);
                    let mut sorted = prefix.clone();
                    sorted.sort_unstable();
                    flag.push(token(&sorted));
                }
                maximal.push(flag);
            });
        }
        if maximal.is_empty() {
            return SimplicialComplex::empty();
        }
        SimplicialComplex::build_complex(&maximal).expect("flags are duplicate-free")
    }

    /// Staircase (order-complex) triangulation of the product. Vertex tokens
    /// are pairs `(a,b)`; the realization is |K| x |L|.
    pub fn product(&self, other: &SimplicialComplex) -> Self {
        let token = |a: u32, b: u32| {
            format!("({},{})", self.vertices[a as usize], other.vertices[b as usize])
        };
        let mut maximal: Vec<Vec<String>> = Vec::new();
        for s in self.maximal_simplices() {
            for t in other.maximal_simplices() {
                // monotone lattice paths from (0,0) to (p,q)
                let (p, q) = (s.len() - 1, t.len() - 1);
                let mut path = vec![(0usize, 0usize)];
                staircases(p, q, &mut path, &mut |path| {
                    maximal.push(path.iter().map(|&(i, j)| token(s[i], t[j])).collect());
                });
            }
        }
        if maximal.is_empty() {
            return SimplicialComplex::empty();
        }
        SimplicialComplex::build_complex(&maximal).expect("staircases are duplicate-free")
    }

    /// Subcomplex of all simplices whose vertex set avoids A entirely.
    /// The caller is responsible for subdividing enough that this is
    /// homotopy equivalent to the set-difference of realizations.
    pub fn full_subcomplex_complement(&self, a: &SimplicialComplex) -> Result<Self> {
        if !a.is_subcomplex_of(self) {
            return Err(Error::NotASubcomplex(
                "complement argument is not a subcomplex".to_string(),
            ));
        }
        let avoid: BTreeSet<u32> =
            a.vertices().iter().filter_map(|t| self.vertex_id(t)).collect();
        let mut sims = Vec::new();
        for d in 0..self.simplices.len() {
            for s in &self.simplices[d] {
                if s.iter().all(|v| !avoid.contains(v)) {
                    sims.push(s.clone());
                }
            }
        }
        Ok(self.from_id_simplices(&sims))
    }

    /// Lexicographically smallest maximal tree by breadth-first growth from
    /// the least vertex. Edges come back as (low, high) id pairs, sorted.
    pub fn spanning_tree(&self) -> Result<Vec<(u32, u32)>> {
        let order: Vec<u32> = (0..self.n_vertices() as u32).collect();
        self.spanning_tree_with_priority(&order)
    }

    /// Same, but neighbor visiting order follows the given vertex priority
    /// permutation (used to exercise tree-independence).
    pub fn spanning_tree_with_priority(&self, priority: &[u32]) -> Result<Vec<(u32, u32)>> {
        let n = self.n_vertices();
        if n == 0 {
            return Err(Error::Disconnected);
        }
        let mut rank = vec![0usize; n];
        for (i, &v) in priority.iter().enumerate() {
            rank[v as usize] = i;
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for e in self.simplices(1) {
            adj[e[0] as usize].push(e[1]);
            adj[e[1] as usize].push(e[0]);
        }
        for list in adj.iter_mut() {
            list.sort_by_key(|&v| rank[v as usize]);
        }
        let root = priority[0];
        let mut seen = vec![false; n];
        seen[root as usize] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut tree = Vec::new();
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    tree.push((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }
        tree.sort_unstable();
        Ok(tree)
    }

    /// Rebuild with renamed vertex tokens (must stay injective).
    pub fn relabel(&self, rename: &dyn Fn(&str) -> String) -> Result<Self> {
        let new_tokens: Vec<String> = self.vertices.iter().map(|t| rename(t)).collect();
        let mut dedup = new_tokens.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != new_tokens.len() {
            return Err(Error::InvalidMap("relabelling is not injective".to_string()));
        }
        let maximal: Vec<Vec<String>> = self
            .maximal_simplices()
            .iter()
            .map(|s| s.iter().map(|&v| new_tokens[v as usize].clone()).collect())
            .collect();
        if maximal.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::build_complex(&maximal)
    }

    /// Structural sanity check used by tests: face closure, ordering, dim.
    pub fn validate(&self) -> Result<()> {
        for (d, sims) in self.simplices.iter().enumerate() {
            if sims.is_empty() {
                return Err(Error::InternalMismatch(format!("empty dimension {}", d)));
            }
            let mut prev: Option<&Vec<u32>> = None;
            for s in sims {
                if s.len() != d + 1 {
                    return Err(Error::InternalMismatch("tuple length mismatch".into()));
                }
                if !s.windows(2).all(|w| w[0] < w[1]) {
                    return Err(Error::InternalMismatch("tuple not increasing".into()));
                }
                if let Some(p) = prev {
                    if p >= s {
                        return Err(Error::InternalMismatch("tuples out of order".into()));
                    }
                }
                prev = Some(s);
                if d > 0 {
                    for k in 0..s.len() {
                        let mut face = s.clone();
                        face.remove(k);
                        if self.simplex_index(d - 1, &face).is_none() {
                            return Err(Error::InternalMismatch("missing face".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn insert_with_faces(sets: &mut Vec<BTreeSet<Vec<u32>>>, simplex: &[u32]) {
    let d = simplex.len() - 1;
    while sets.len() <= d {
        sets.push(BTreeSet::new());
    }
    if !sets[d].insert(simplex.to_vec()) {
        return;
    }
    if d == 0 {
        return;
    }
    for k in 0..simplex.len() {
        let mut face = simplex.to_vec();
        face.remove(k);
        insert_with_faces(sets, &face);
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn staircases(
    p: usize,
    q: usize,
    path: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    let &(i, j) = path.last().unwrap();
    if i == p && j == q {
        visit(path);
        return;
    }
    if i < p {
        path.push((i + 1, j));
        staircases(p, q, path, visit);
        path.pop();
    }
    if j < q {
        path.push((i, j + 1));
        staircases(p, q, path, visit);
        path.pop();
    }
}

fn sphere(n: usize) -> SimplicialComplex {
    // boundary of the (n+1)-simplex on n+2 vertices
    let count = n + 2;
    let width = (count - 1).to_string().len();
    let toks: Vec<String> = (0..count).map(|i| format!("{:0width$}", i)).collect();
    let mut maximal = Vec::new();
    // all (n+1)-subsets
    let mut subset: Vec<usize> = (0..=n).collect();
    loop {
        maximal.push(subset.iter().map(|&i| toks[i].clone()).collect::<Vec<_>>());
        // next combination
        let mut i = subset.len();
        loop {
            if i == 0 {
                return SimplicialComplex::build_complex(&maximal).expect("sphere facets valid");
            }
            i -= 1;
            if subset[i] < count - (subset.len() - i) {
                subset[i] += 1;
                for j in i + 1..subset.len() {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A closed pair (ambient, sub).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPair {
    pub ambient: SimplicialComplex,
    pub sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(Error::NotASubcomplex("pair sub part".to_string()));
        }
        Ok(SimplicialPair { ambient, sub })
    }
}

/// A vertex map under which every simplex image spans a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    map: Vec<u32>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut map = Vec::with_capacity(source.n_vertices());
        for tok in source.vertices() {
            let img = vertex_map
                .get(tok)
                .ok_or_else(|| Error::InvalidMap(format!("vertex {:?} has no image", tok)))?;
            let id = target
                .vertex_id(img)
                .ok_or_else(|| Error::InvalidMap(format!("image {:?} is not a vertex", img)))?;
            map.push(id);
        }
        let m = SimplicialMap { source, target, map };
        m.check_simplicial()?;
        Ok(m)
    }

    pub fn from_fn(
        source: SimplicialComplex,
        target: SimplicialComplex,
        f: &dyn Fn(&str) -> String,
    ) -> Result<Self> {
        let pairs: BTreeMap<String, String> =
            source.vertices().iter().map(|t| (t.clone(), f(t))).collect();
        SimplicialMap::new(source, target, &pairs)
    }

    fn check_simplicial(&self) -> Result<()> {
        // checking maximal simplices suffices: faces map into subsets
        for s in self.source.maximal_simplices() {
            let mut img: Vec<u32> = s.iter().map(|&v| self.map[v as usize]).collect();
            img.sort_unstable();
            img.dedup();
            if !self.target.has_ids(&img) {
                return Err(Error::InvalidMap(format!(
                    "image of simplex {{{}}} spans no simplex",
                    self.source.tokens_of(&s).join(",")
                )));
            }
        }
        Ok(())
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        SimplicialMap {
            source: k.clone(),
            target: k.clone(),
            map: (0..k.n_vertices() as u32).collect(),
        }
    }

    pub fn constant(
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        vertex: &str,
    ) -> Result<Self> {
        let id = target
            .vertex_id(vertex)
            .ok_or_else(|| Error::InvalidMap(format!("{:?} is not a vertex", vertex)))?;
        Ok(SimplicialMap {
            source: source.clone(),
            target: target.clone(),
            map: vec![id; source.n_vertices()],
        })
    }

    /// g.compose(f) is "g after f" when self = g and f: K -> source(g).
    pub fn compose_after(&self, f: &SimplicialMap) -> Result<Self> {
        if f.target != self.source {
            return Err(Error::InvalidMap("composition mismatch".to_string()));
        }
        Ok(SimplicialMap {
            source: f.source.clone(),
            target: self.target.clone(),
            map: f.map.iter().map(|&v| self.map[v as usize]).collect(),
        })
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn image_of(&self, v: u32) -> u32 {
        self.map[v as usize]
    }

    pub fn is_self_map(&self) -> bool {
        self.source == self.target
    }
}

// ---------------------------------------------------------------------------
// text formats
// ---------------------------------------------------------------------------

/// Complex file: one maximal simplex per line as whitespace-separated vertex
/// tokens; `#` starts a comment; a `[subcomplex]` line begins the sub part.
pub fn parse_complex_text(
    text: &str,
) -> Result<(SimplicialComplex, Option<SimplicialComplex>)> {
    let mut main: Vec<Vec<String>> = Vec::new();
    let mut sub: Option<Vec<Vec<String>>> = None;
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "[subcomplex]" {
            if sub.is_some() {
                return Err(Error::Parse("repeated [subcomplex] marker".to_string()));
            }
            sub = Some(Vec::new());
            continue;
        }
        let toks: Vec<String> = line.split_whitespace().map(|t| t.to_string()).collect();
        match sub.as_mut() {
            Some(s) => s.push(toks),
            None => main.push(toks),
        }
    }
    let ambient = SimplicialComplex::build_complex(&main)?;
    let sub = match sub {
        Some(s) => Some(SimplicialComplex::build_complex(&s)?),
        None => None,
    };
    Ok((ambient, sub))
}

/// Render maximal simplices in the complex file format.
pub fn render_complex_text(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for s in k.maximal_simplices_tokens() {
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    out
}

/// Map file: lines `v -> w`.
pub fn parse_map_text(
    text: &str,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
) -> Result<SimplicialMap> {
    let mut pairs = BTreeMap::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (from, to) = line
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("expected `v -> w`, got {:?}", line)))?;
        let from = from.trim().to_string();
        let to = to.trim().to_string();
        if from.is_empty() || to.is_empty() {
            return Err(Error::Parse(format!("expected `v -> w`, got {:?}", line)));
        }
        if pairs.insert(from.clone(), to).is_some() {
            return Err(Error::Parse(format!("vertex {:?} mapped twice", from)));
        }
    }
    SimplicialMap::new(source.clone(), target.clone(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(sims: &[&[&str]]) -> Vec<Vec<String>> {
        sims.iter().map(|s| s.iter().map(|t| t.to_string()).collect()).collect()
    }

    #[test]
    fn triangle_boundary() {
        let k =
            SimplicialComplex::build_complex(&toks(&[&["a", "b"], &["b", "c"], &["a", "c"]]))
                .unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.f_vector(), vec![3, 3]);
        k.validate().unwrap();
    }

    #[test]
    fn single_point() {
        let k = SimplicialComplex::build_complex(&toks(&[&["a"]])).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(k.f_vector(), vec![1]);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let err = SimplicialComplex::build_complex(&toks(&[&["a", "a"]])).unwrap_err();
        assert!(matches!(err, Error::DuplicateVertexInSimplex(_)));
    }

    #[test]
    fn empty_complex_dim() {
        let k = SimplicialComplex::empty();
        assert_eq!(k.dim(), -1);
        assert_eq!(k.euler_characteristic_f(), 0);
    }

    #[test]
    fn torus_f_vector() {
        let k = SimplicialComplex::builtin("torus").unwrap();
        assert_eq!(k.f_vector(), vec![7, 21, 14]);
        assert_eq!(k.euler_characteristic_f(), 0);
        k.validate().unwrap();
    }

    #[test]
    fn sphere_f_vectors() {
        assert_eq!(SimplicialComplex::builtin("sphere:2").unwrap().f_vector(), vec![4, 6, 4]);
        assert_eq!(SimplicialComplex::builtin("sphere:1").unwrap().f_vector(), vec![3, 3]);
        assert_eq!(SimplicialComplex::builtin("sphere:0").unwrap().f_vector(), vec![2]);
        let s4 = SimplicialComplex::builtin("sphere:4").unwrap();
        assert_eq!(s4.f_vector(), vec![6, 15, 20, 15, 6]);
        assert_eq!(s4.euler_characteristic_f(), 2);
    }

    #[test]
    fn rp2_f_vector_and_euler() {
        let k = SimplicialComplex::builtin("rp2").unwrap();
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        assert_eq!(k.euler_characteristic_f(), 1);
        k.validate().unwrap();
    }

    #[test]
    fn klein_moebius_cylinder_counts() {
        let klein = SimplicialComplex::builtin("klein").unwrap();
        assert_eq!(klein.f_vector(), vec![9, 27, 18]);
        assert_eq!(klein.euler_characteristic_f(), 0);
        klein.validate().unwrap();
        let mo = SimplicialComplex::builtin("moebius").unwrap();
        assert_eq!(mo.f_vector(), vec![5, 10, 5]);
        assert_eq!(mo.euler_characteristic_f(), 0);
        let cyl = SimplicialComplex::builtin("cylinder").unwrap();
        assert_eq!(cyl.f_vector(), vec![6, 12, 6]);
        assert_eq!(cyl.euler_characteristic_f(), 0);
    }

    #[test]
    fn torus_powers() {
        let t2 = SimplicialComplex::builtin("torus:2").unwrap();
        assert_eq!(t2.f_vector(), vec![9, 27, 18]);
        assert_eq!(t2.euler_characteristic_f(), 0);
        let t3 = SimplicialComplex::builtin("torus:3").unwrap();
        assert_eq!(t3.f_vector(), vec![27, 189, 324, 162]);
        assert_eq!(t3.euler_characteristic_f(), 0);
        t3.validate().unwrap();
        let t1 = SimplicialComplex::builtin("torus:1").unwrap();
        assert_eq!(t1.f_vector(), vec![3, 3]);
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(
            SimplicialComplex::builtin("banana"),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            SimplicialComplex::builtin("torus:0"),
            Err(Error::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn cone_over_circle_is_disk() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let disk = circle.cone("p").unwrap();
        assert_eq!(disk.f_vector(), vec![4, 6, 3]);
        assert_eq!(disk.euler_characteristic_f(), 1);
        assert!(matches!(circle.cone("0"), Err(Error::ApexCollision(_))));
    }

    #[test]
    fn cone_over_empty_is_point() {
        let k = SimplicialComplex::empty().cone("p").unwrap();
        assert_eq!(k.f_vector(), vec![1]);
    }

    #[test]
    fn subdivision_counts() {
        let seg = SimplicialComplex::build_complex(&toks(&[&["a", "b"]])).unwrap();
        let sd = seg.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![3, 2]);
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let sd = circle.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![6, 6]);
        let torus = SimplicialComplex::builtin("torus").unwrap();
        let sd = torus.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![42, 126, 84]);
        assert_eq!(sd.euler_characteristic_f(), 0);
        sd.validate().unwrap();
    }

    #[test]
    fn product_unit_law() {
        let pt = SimplicialComplex::build_complex(&toks(&[&["x"]])).unwrap();
        let torus = SimplicialComplex::builtin("torus").unwrap();
        let prod = pt.product(&torus);
        assert_eq!(prod.f_vector(), torus.f_vector());
    }

    #[test]
    fn product_square() {
        let seg = SimplicialComplex::build_complex(&toks(&[&["a", "b"]])).unwrap();
        let sq = seg.product(&seg);
        assert_eq!(sq.f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn product_euler_multiplicative() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let s2 = SimplicialComplex::builtin("sphere:2").unwrap();
        let p = circle.product(&s2);
        assert_eq!(p.euler_characteristic_f(), 0);
        let q = s2.product(&s2);
        assert_eq!(q.euler_characteristic_f(), 4);
        q.validate().unwrap();
    }

    #[test]
    fn complement_of_vertex_in_circle() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let v = circle.full_subcomplex(&["0"]);
        let c = circle.full_subcomplex_complement(&v).unwrap();
        assert_eq!(c.f_vector(), vec![2, 1]);
        assert!(c.is_connected());
    }

    #[test]
    fn complement_rejects_non_subcomplex() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let other = SimplicialComplex::build_complex(&toks(&[&["z"]])).unwrap();
        assert!(matches!(
            circle.full_subcomplex_complement(&other),
            Err(Error::NotASubcomplex(_))
        ));
    }

    #[test]
    fn spanning_trees() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        assert_eq!(circle.spanning_tree().unwrap().len(), 2);
        let torus = SimplicialComplex::builtin("torus").unwrap();
        let tree = torus.spanning_tree().unwrap();
        assert_eq!(tree.len(), 6);
        assert_eq!(torus.simplices(1).len() - tree.len(), 15);
        let pt = SimplicialComplex::build_complex(&toks(&[&["a"]])).unwrap();
        assert!(pt.spanning_tree().unwrap().is_empty());
        let two = SimplicialComplex::builtin("sphere:0").unwrap();
        assert!(matches!(two.spanning_tree(), Err(Error::Disconnected)));
    }

    #[test]
    fn map_validation() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        // collapsing an edge to a vertex is simplicial
        let ok = SimplicialMap::from_fn(circle.clone(), circle.clone(), &|t| {
            if t == "1" {
                "0".to_string()
            } else {
                t.to_string()
            }
        });
        assert!(ok.is_ok());
        // sending an edge across a non-edge is not
        let square = SimplicialComplex::build_complex(&toks(&[
            &["a", "b"],
            &["b", "c"],
            &["c", "d"],
            &["a", "d"],
        ]))
        .unwrap();
        let bad = SimplicialMap::from_fn(square.clone(), square.clone(), &|t| {
            match t {
                "b" => "c".to_string(),
                "c" => "b".to_string(),
                other => other.to_string(),
            }
        });
        assert!(matches!(bad, Err(Error::InvalidMap(_))));
    }

    #[test]
    fn face_closure_idempotent() {
        for name in ["torus", "rp2", "klein", "sphere:2", "moebius", "cylinder"] {
            let k = SimplicialComplex::builtin(name).unwrap();
            let rebuilt =
                SimplicialComplex::build_complex(&k.maximal_simplices_tokens()).unwrap();
            assert_eq!(k, rebuilt, "{} closure idempotence", name);
        }
    }

    #[test]
    fn parse_and_render() {
        let text = "# a circle\na b\nb c\na c\n\n[subcomplex]\na b # one edge\n";
        let (k, sub) = parse_complex_text(text).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3]);
        let sub = sub.unwrap();
        assert_eq!(sub.f_vector(), vec![2, 1]);
        assert!(sub.is_subcomplex_of(&k));
        let rendered = render_complex_text(&k);
        let (k2, none) = parse_complex_text(&rendered).unwrap();
        assert_eq!(k, k2);
        assert!(none.is_none());
    }

    #[test]
    fn parse_map() {
        let circle = SimplicialComplex::builtin("sphere:1").unwrap();
        let m = parse_map_text("0 -> 0\n1 -> 2\n2 -> 1\n", &circle, &circle).unwrap();
        assert!(m.is_self_map());
        assert_eq!(m.image_of(1), 2);
        assert!(parse_map_text("0 -> 0\n", &circle, &circle).is_err(), "partial map");
    }

    #[test]
    fn pair_construction() {
        let torus = SimplicialComplex::builtin("torus").unwrap();
        let edge = torus.full_subcomplex(&["0", "1"]);
        assert!(SimplicialPair::new(torus.clone(), edge).is_ok());
        let stray = SimplicialComplex::build_complex(&toks(&[&["z"]])).unwrap();
        assert!(SimplicialPair::new(torus, stray).is_err());
    }
}
