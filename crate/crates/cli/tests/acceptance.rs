//! End-to-end acceptance checks, one test per criterion. Each test prints a
//! single pass line; run with --nocapture to see them on success.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use topo_core::cohomology::{kronecker, verify_cup_laws, verify_exterior_degree_one};
use topo_core::exactlinalg::{PrimeField, Rationals};
use topo_core::homology::{
    euler_three_ways, homology_groups, verify_kunneth, verify_les, verify_mayer_vietoris,
    verify_uct,
};
use topo_core::hopfcatalog::{full_catalog, power_map_lefschetz, CatalogMode, ExteriorModel};
use topo_core::lefschetz::{coincidence_number, hopf_trace_report, lefschetz_number};
use topo_core::manifold::{
    degree, fundamental_class, orient_signs, parity_report, poincare_pairing_report,
    separation_report, EmbeddedSphere,
};
use topo_core::pi1::{abelianization, edge_path_group, torsion_count, verify_hurewicz};
use topo_core::{Coefficients, Error, SimplicialComplex, SimplicialMap, SimplicialPair};

const CORPUS: &[&str] = &[
    "sphere:1", "sphere:2", "sphere:3", "sphere:4", "torus", "torus:2", "torus:3", "rp2",
    "klein", "moebius", "cylinder",
];

fn builtin(name: &str) -> SimplicialComplex {
    SimplicialComplex::builtin(name).unwrap()
}

fn complex(facets: &[&[&str]]) -> SimplicialComplex {
    let toks: Vec<Vec<String>> =
        facets.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
    SimplicialComplex::build_complex(&toks).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("criterion {:02}: {}: pass", n, what);
}

#[test]
fn criterion_01_sphere_reduced_homology() {
    for n in 1..=4usize {
        let k = builtin(&format!("sphere:{}", n));
        let groups = homology_groups(&k, Coefficients::Z, true).unwrap();
        assert!(groups.len() > n, "sphere:{} has too few degrees", n);
        for g in &groups {
            if g.degree == n {
                assert_eq!(g.betti, 1, "sphere:{} degree {}", n, g.degree);
                assert!(g.torsion.is_empty());
            } else {
                assert!(g.is_trivial(), "sphere:{} degree {} = {}", n, g.degree, g);
            }
        }
    }
    pass(1, "reduced integral homology of sphere:1..4 is Z exactly in the top degree");
}

#[test]
fn criterion_02_torus_torsion_counts() {
    for n in 1..=3usize {
        let k = builtin(&format!("torus:{}", n));
        let ab = abelianization(&edge_path_group(&k).unwrap());
        assert_eq!(ab.betti, n, "torus:{} abelianization {}", n, ab);
        assert!(ab.torsion.is_empty());
        for m in 2..=6u64 {
            let count = torsion_count(&ab, m).unwrap();
            assert_eq!(count, BigInt::from(m).pow(n as u32), "torus:{} k={}", n, m);
        }
    }
    pass(2, "pi_1 of torus:n abelianizes to Z^n with k-torsion count k^n for k = 2..6");
}

#[test]
fn criterion_03_euler_vanishing() {
    for name in ["torus:1", "torus:2", "torus:3", "klein"] {
        let e = euler_three_ways(&builtin(name)).unwrap();
        assert!(e.agree(), "{} routes disagree", name);
        assert_eq!(e.value().unwrap(), 0, "{}", name);
    }
    pass(3, "alternating sum vanishes three ways on torus:1..3 and klein");
}

#[test]
fn criterion_04_power_map_traces() {
    // symbolic sweep against the closed form, recomputed here
    for r in 0..=8usize {
        let degrees: Vec<u64> = (0..r).map(|i| 2 * i as u64 + 1).collect();
        let model = ExteriorModel::new(format!("rank {}", r), degrees).unwrap();
        for l in -5..=5i64 {
            let got = power_map_lefschetz(&model, l).unwrap();
            assert_eq!(got, BigInt::from(1 - l).pow(r as u32), "r={} l={}", r, l);
        }
    }

    // simplicial instance: a hexagon wraps twice around a triangle; pairing
    // against a degree-one reference map gives the trace of the doubling map
    let c3 = builtin("sphere:1");
    let c6 = complex(&[
        &["a0", "a1"],
        &["a1", "a2"],
        &["a2", "a3"],
        &["a3", "a4"],
        &["a4", "a5"],
        &["a5", "a0"],
    ]);
    let circle_map = |images: [u32; 6]| {
        SimplicialMap::from_fn(c6.clone(), c3.clone(), &|t| {
            let i: usize = t.strip_prefix('a').unwrap().parse().unwrap();
            images[i].to_string()
        })
        .unwrap()
    };
    let pick = |a: SimplicialMap, b: SimplicialMap, want: i64| {
        if degree(&a).unwrap() == BigInt::from(want) {
            a
        } else {
            assert_eq!(degree(&b).unwrap(), BigInt::from(want));
            b
        }
    };
    let double = pick(circle_map([0, 1, 2, 0, 1, 2]), circle_map([0, 2, 1, 0, 2, 1]), 2);
    let reference = pick(circle_map([0, 1, 2, 0, 0, 0]), circle_map([0, 2, 1, 0, 0, 0]), 1);
    let lambda = coincidence_number(&double, &reference).unwrap();
    assert_eq!(lambda, BigInt::from(-1));

    pass(4, "power map traces equal (1-l)^r and the simplicial doubling map has trace -1");
}

#[test]
fn criterion_05_torus_ring_is_exterior() {
    for n in 1..=3usize {
        let k = builtin(&format!("torus:{}", n));
        let check = verify_exterior_degree_one(&Rationals, &k, n).unwrap();
        assert!(check.report.passed(), "torus:{} {:?}", n, check.report);
        let top = check.top_cochain.expect("top product cochain");
        let zeta: Vec<BigRational> = fundamental_class(&k)
            .unwrap()
            .into_iter()
            .map(BigRational::from)
            .collect();
        let value = kronecker(&Rationals, &top, &zeta);
        assert!(value.abs().is_one(), "torus:{} top pairing {}", n, value);
    }
    pass(5, "torus:n cohomology is exterior on n degree-one generators, top product +-1");
}

#[test]
fn criterion_06_cup_product_laws() {
    let f2 = PrimeField::new(2).unwrap();
    for name in CORPUS {
        let k = builtin(name);
        let rq = verify_cup_laws(&Rationals, &k).unwrap();
        assert!(rq.passed(), "{} over Q {:?}", name, rq);
        let r2 = verify_cup_laws(&f2, &k).unwrap();
        assert!(r2.passed(), "{} over F2 {:?}", name, r2);
    }
    pass(6, "cup products skew-commute and associate on every corpus complex over Q and F2");
}

#[test]
fn criterion_07_hopf_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260814);
    let mut maps: Vec<SimplicialMap> = Vec::new();

    let s2 = builtin("sphere:2");
    for _ in 0..8 {
        let mut perm: Vec<u32> = (0..4).collect();
        perm.shuffle(&mut rng);
        maps.push(
            SimplicialMap::from_fn(s2.clone(), s2.clone(), &|t| {
                perm[t.parse::<usize>().unwrap()].to_string()
            })
            .unwrap(),
        );
    }

    let t7 = builtin("torus");
    for _ in 0..8 {
        let m = rng.gen_range(1..7u32);
        let c = rng.gen_range(0..7u32);
        maps.push(
            SimplicialMap::from_fn(t7.clone(), t7.clone(), &|t| {
                let v: u32 = t.parse().unwrap();
                ((m * v + c) % 7).to_string()
            })
            .unwrap(),
        );
    }

    let band = builtin("moebius");
    for (m, c) in [(1u32, 1u32), (1, 2), (4, 0)] {
        // 4 = -1 mod 5, the reflection
        maps.push(
            SimplicialMap::from_fn(band.clone(), band.clone(), &|t| {
                let v: u32 = t.parse().unwrap();
                ((m * v + c) % 5).to_string()
            })
            .unwrap(),
        );
    }

    for name in ["klein", "rp2", "cylinder", "sphere:3"] {
        let k = builtin(name);
        maps.push(SimplicialMap::identity(&k));
    }
    maps.push(SimplicialMap::constant(&t7, &t7, "0").unwrap());
    maps.push(SimplicialMap::constant(&s2, &s2, "0").unwrap());

    assert!(maps.len() >= 20, "only {} maps", maps.len());
    for f in &maps {
        let (lambda, report) = hopf_trace_report(f).unwrap();
        assert!(report.passed(), "trace {} on {:?}: {:?}", lambda, f.source().f_vector(), report);
    }

    // identity traces are the alternating sums
    for name in ["klein", "rp2", "cylinder", "sphere:3"] {
        let k = builtin(name);
        let lambda = lefschetz_number(&SimplicialMap::identity(&k)).unwrap();
        assert_eq!(lambda, BigInt::from(euler_three_ways(&k).unwrap().value().unwrap()));
    }

    pass(7, "chain and homology traces agree on 25 corpus self-maps");
}

#[test]
fn criterion_08_duality_pairing() {
    let mut complexes: Vec<(String, SimplicialComplex)> = Vec::new();
    for name in ["sphere:1", "sphere:2", "sphere:3", "sphere:4", "torus", "torus:2", "torus:3"] {
        complexes.push((name.to_string(), builtin(name)));
    }
    complexes.push(("sphere:2 x sphere:1".into(), builtin("sphere:2").product(&builtin("sphere:1"))));
    complexes.push(("sphere:2 x sphere:2".into(), builtin("sphere:2").product(&builtin("sphere:2"))));
    for (name, k) in &complexes {
        let report = poincare_pairing_report(&Rationals, k).unwrap();
        assert!(report.passed(), "{} {:?}", name, report);
    }
    pass(8, "top pairing has full rank and Betti numbers are palindromic on 9 closed orientable complexes");
}

#[test]
fn criterion_09_orientability_trichotomy() {
    let torus = builtin("torus");
    assert!(orient_signs(&torus, false).is_ok());
    let groups = homology_groups(&torus, Coefficients::Z, false).unwrap();
    assert_eq!(groups[2].betti, 1);
    assert!(groups[2].torsion.is_empty());

    for name in ["rp2", "klein"] {
        let k = builtin(name);
        match orient_signs(&k, false) {
            Err(Error::NotOrientable) => {}
            other => panic!("{} expected NotOrientable, got {:?}", name, other.map(|_| ())),
        }
        let over_z = homology_groups(&k, Coefficients::Z, false).unwrap();
        assert!(over_z[2].is_trivial(), "{} integral top group {}", name, over_z[2]);
        let over_f2 = homology_groups(&k, Coefficients::Fp(2), false).unwrap();
        assert_eq!(over_f2[2].betti, 1, "{} mod 2 top group", name);
    }
    pass(9, "torus carries an integral top class, rp2 and klein only a mod 2 one");
}

#[test]
fn criterion_10_exact_sequences() {
    let circle = builtin("sphere:1");
    let disk = circle.cone("p").unwrap();
    let torus = builtin("torus");
    let meridian = complex(&[&["0", "1"], &["1", "3"], &["0", "3"]]);
    let s2 = builtin("sphere:2");
    let equator = complex(&[&["0", "1"], &["1", "2"], &["0", "2"]]);
    let klein = builtin("klein");
    let row = complex(&[&["00", "10"], &["10", "20"], &["00", "20"]]);
    let band = builtin("moebius");

    let pairs = [
        (disk, circle.clone()),
        (torus.clone(), meridian),
        (s2.clone(), equator),
        (klein.clone(), row),
        (band.clone(), band.clone()),
    ];
    for (ambient, sub) in pairs {
        let pair = SimplicialPair::new(ambient, sub).unwrap();
        let report = verify_les(&pair).unwrap();
        assert!(report.passed(), "{:?}", report);
    }

    // three covers
    let arc1 = circle.full_subcomplex(&["0", "1"]);
    let arc2 = complex(&[&["1", "2"], &["0", "2"]]);
    assert!(verify_mayer_vietoris(&circle, &arc1, &arc2).unwrap().passed());

    let cone1 = complex(&[&["0", "1", "2"]]);
    let cone2 = complex(&[&["0", "1", "3"], &["0", "2", "3"], &["1", "2", "3"]]);
    assert!(verify_mayer_vietoris(&s2, &cone1, &cone2).unwrap().passed());

    let facets = torus.maximal_simplices_tokens();
    let half1 = SimplicialComplex::build_complex(&facets[..7]).unwrap();
    let half2 = SimplicialComplex::build_complex(&facets[7..]).unwrap();
    assert!(verify_mayer_vietoris(&torus, &half1, &half2).unwrap().passed());

    for name in ["rp2", "klein"] {
        let report = verify_uct(&builtin(name), &[2, 3, 5]).unwrap();
        assert!(report.passed(), "{} {:?}", name, report);
    }

    for (a, b) in [("sphere:2", "sphere:1"), ("rp2", "sphere:1"), ("klein", "sphere:1")] {
        let report = verify_kunneth(&builtin(a), &builtin(b)).unwrap();
        assert!(report.passed(), "{} x {} {:?}", a, b, report);
    }

    pass(10, "long exact sequences on 5 pairs, 3 covers, coefficients at 2,3,5, and 3 products");
}

#[test]
fn criterion_11_hurewicz() {
    for name in CORPUS {
        let k = builtin(name);
        assert!(k.is_connected(), "{}", name);
        let report = verify_hurewicz(&k).unwrap();
        assert!(report.passed(), "{} {:?}", name, report);
    }
    pass(11, "abelianized edge path group matches first homology on all 11 corpus complexes");
}

#[test]
fn criterion_12_circle_separates_sphere() {
    for which in [EmbeddedSphere::Equator, EmbeddedSphere::FacetBoundary] {
        let report = separation_report(2, which).unwrap();
        assert!(report.passed(), "{:?}", report);
    }
    pass(12, "both embedded circles split the subdivided sphere into exactly two components");
}

#[test]
fn criterion_13_catalog_consistency() {
    let consistent = full_catalog(CatalogMode::SigmaConsistent, 8).unwrap();
    assert_eq!(consistent.len(), 31);
    for e in &consistent {
        assert!(e.sum_matches_dim, "{} degree sum", e.model.label());
        assert!(e.parity_matches, "{} parity", e.model.label());
    }

    let strict = full_catalog(CatalogMode::StrictPaper, 8).unwrap();
    let failing: Vec<String> =
        strict.iter().filter(|e| !e.sum_matches_dim).map(|e| e.model.label().to_string()).collect();
    assert_eq!(failing, ["D4", "D5", "D6", "D7", "D8", "E8"]);

    pass(13, "degree sums and parities hold up to rank 8; strict lists fail exactly at D_l and E8");
}

#[test]
fn criterion_14_parity_corollaries() {
    for name in ["torus:3", "torus", "sphere:2"] {
        let report = parity_report(&builtin(name)).unwrap();
        assert!(report.passed(), "{} {:?}", name, report);
    }
    let thickened = builtin("cylinder").product(&builtin("sphere:1"));
    let report = parity_report(&thickened).unwrap();
    assert!(report.passed(), "thickened cylinder {:?}", report);
    pass(14, "odd dimension kills the alternating sum and boundaries keep it even");
}

#[test]
fn criterion_15_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let rot = path("rot.map", &(0..7).map(|i| format!("{} -> {}\n", i, (i + 1) % 7)).collect::<String>());
    let dbl = path("dbl.map", &(0..7).map(|i| format!("{} -> {}\n", i, (2 * i) % 7)).collect::<String>());
    let circle = path("circle.cx", "0 1\n1 3\n0 3\n");
    let cone1 = path("cone1.cx", "0 1 2\n");
    let cone2 = path("cone2.cx", "0 1 3\n0 2 3\n1 2 3\n");

    let commands: Vec<(Vec<String>, i32)> = vec![
        (svec(&["homology", "--builtin", "torus"]), 0),
        (svec(&["homology", "--builtin", "klein", "--coeff", "F2", "--reduced"]), 0),
        (svec(&["homology", "--builtin", "torus", "--rel", &circle]), 0),
        (svec(&["homology", "--builtin", "torus", "--format", "tsv"]), 0),
        (svec(&["cohomology", "--builtin", "rp2", "--coeff", "Z"]), 0),
        (svec(&["ring", "--builtin", "torus", "--coeff", "Q"]), 0),
        (svec(&["euler", "--builtin", "klein"]), 0),
        (svec(&["pi1", "--builtin", "klein"]), 0),
        (svec(&["hurewicz", "--builtin", "torus"]), 0),
        (svec(&["orient", "--builtin", "rp2"]), 0),
        (svec(&["duality", "--builtin", "torus", "--coeff", "F3"]), 0),
        (svec(&["degree", "--builtin", "torus", "--map", &rot]), 0),
        (svec(&["lefschetz", "--builtin", "torus", "--map", &dbl]), 0),
        (svec(&["coincidence", "--builtin", "torus", "--map", &dbl, "--map", &rot]), 0),
        (svec(&["separation", "2", "--embed", "equator"]), 0),
        (svec(&["separation", "2", "--embed", "facet"]), 0),
        (svec(&["kunneth", "--builtin", "rp2", "--with-builtin", "sphere:1"]), 0),
        (svec(&["uct", "--builtin", "klein", "--prime", "2", "--prime", "3"]), 0),
        (svec(&["les", "--builtin", "torus", "--rel", &circle]), 0),
        (svec(&["mv", "--builtin", "sphere:2", "--cover", &cone1, "--cover", &cone2]), 0),
        (svec(&["product", "--builtin", "sphere:1", "--with-builtin", "sphere:1"]), 0),
        (svec(&["subdivide", "--builtin", "sphere:1", "--times", "2"]), 0),
        (svec(&["catalog"]), 0),
        (svec(&["catalog", "--strict-paper"]), 1),
        (svec(&["group-predict", "T1xA1", "--k", "3"]), 0),
        (svec(&["torsion", "--builtin", "torus:2", "--k", "3"]), 0),
    ];

    for (args, want_code) in &commands {
        let runs: Vec<_> = (0..3).map(|_| run_topo(args)).collect();
        let (stdout, stderr, code) = &runs[0];
        assert_eq!(code, &Some(*want_code), "{:?}\nstderr: {}", args, String::from_utf8_lossy(stderr));
        assert!(!stdout.is_empty(), "{:?} printed nothing", args);
        for later in &runs[1..] {
            assert_eq!(&runs[0], later, "{:?} output differs between runs", args);
        }
    }
    pass(15, "all 26 command invocations are byte-identical across three runs");
}

fn svec(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

fn run_topo(args: &[String]) -> (Vec<u8>, Vec<u8>, Option<i32>) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_topo"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.stderr, out.status.code())
}
