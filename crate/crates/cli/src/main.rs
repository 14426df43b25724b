//! `topo`: exact topology of finite simplicial complexes from the shell.
//!
//! Exit codes: 0 when the command ran and every verdict passed, 1 when a
//! verdict failed, 2 on input or usage errors. Output is deterministic:
//! identical invocations produce identical bytes.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use topo_core::cohomology::{
    exterior_generator_degrees, integral_cohomology_groups, ring_structure, verify_cup_laws,
};
use topo_core::complex::{parse_complex_text, parse_map_text, render_complex_text, SimplicialMap};
use topo_core::error::Error;
use topo_core::exactlinalg::{Field, PrimeField, Rationals};
use topo_core::homology::{
    chain_complex, euler_three_ways, field_homology, homology_groups, integral_homology,
    relative_chain_complex, verify_kunneth, verify_les, verify_mayer_vietoris, verify_uct,
    Coefficients,
};
use topo_core::hopfcatalog::{
    catalog_entry, full_catalog, group_prediction, parse_group_spec, CatalogEntry, CatalogMode,
    LieType,
};
use topo_core::lefschetz::{
    chain_trace, coincidence_identities_report, coincidence_number, fixed_point_certificate,
    hopf_trace_report,
};
use topo_core::manifold::{
    closed_pseudomanifold_dim, degree, orient_signs, parity_report, poincare_pairing_report,
    separation_report, EmbeddedSphere,
};
use topo_core::pi1::{abelianization, edge_path_group, torsion_count, verify_hurewicz};
use topo_core::report::Report;
use topo_core::{HomologyGroup, Result, SimplicialComplex, SimplicialPair};

#[derive(Parser)]
#[command(
    name = "topo",
    about = "Exact homology, cohomology rings, duality and fixed point theory of finite simplicial complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Args)]
struct ComplexArg {
    /// Complex file (see README for the format)
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Named builtin complex, e.g. sphere:2, torus, rp2, klein, moebius, cylinder, torus:3
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct SecondComplexArg {
    /// Second complex file
    #[arg(long = "with", value_name = "FILE")]
    with_file: Option<PathBuf>,
    /// Second complex as a builtin name
    #[arg(long = "with-builtin")]
    with_builtin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Embed {
    Equator,
    Facet,
}

#[derive(Subcommand)]
enum Command {
    /// Homology groups, absolute or relative to a subcomplex
    Homology {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value = "Z")]
        coeff: String,
        /// Use the augmented chain complex
        #[arg(long)]
        reduced: bool,
        /// Subcomplex file for relative homology
        #[arg(long)]
        rel: Option<PathBuf>,
    },
    /// Cohomology groups
    Cohomology {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Cup products of cohomology classes, with the multiplication laws checked
    Ring {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value = "Q")]
        coeff: String,
    },
    /// Alternating sum computed three independent ways
    Euler {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Edge path presentation of the fundamental group and its abelianization
    Pi1 {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// The abelianized edge path group against first homology
    Hurewicz {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Orientability of a closed pseudomanifold with top homology evidence
    Orient {
        #[command(flatten)]
        complex: ComplexArg,
    },
    /// Nondegeneracy of the pairing into the top degree
    Duality {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value = "Q")]
        coeff: String,
    },
    /// Degree of a self-map of an oriented closed pseudomanifold
    Degree {
        #[command(flatten)]
        complex: ComplexArg,
        /// Vertex map file with lines "v -> w"
        #[arg(long)]
        map: PathBuf,
    },
    /// Alternating trace of a self-map, at chain and homology level
    Lefschetz {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        map: PathBuf,
    },
    /// Coincidence number of two (or three) self-maps
    Coincidence {
        #[command(flatten)]
        complex: ComplexArg,
        /// Map files; give the flag two or three times
        #[arg(long, required = true)]
        map: Vec<PathBuf>,
    },
    /// Complement of an embedded sphere in the double subdivision
    Separation {
        /// Ambient sphere dimension
        #[arg(default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Embed::Equator)]
        embed: Embed,
    },
    /// Homology of a product against the formula from the factors
    Kunneth {
        #[command(flatten)]
        complex: ComplexArg,
        #[command(flatten)]
        second: SecondComplexArg,
    },
    /// Universal coefficients over chosen primes
    Uct {
        #[command(flatten)]
        complex: ComplexArg,
        /// Prime to test; repeatable
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
    /// Exactness of the long sequence of a pair
    Les {
        #[command(flatten)]
        complex: ComplexArg,
        /// Subcomplex file
        #[arg(long)]
        rel: PathBuf,
    },
    /// Exactness of the sequence of a two-part cover
    Mv {
        #[command(flatten)]
        complex: ComplexArg,
        /// Cover part file; give the flag exactly twice
        #[arg(long, required = true)]
        cover: Vec<PathBuf>,
    },
    /// Staircase triangulation of a product, printed as a complex file
    Product {
        #[command(flatten)]
        complex: ComplexArg,
        #[command(flatten)]
        second: SecondComplexArg,
    },
    /// Barycentric subdivision, printed as a complex file
    Subdivide {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Generator degree table of compact group cohomology rings
    Catalog {
        /// Single type such as A3 or E8; all types up to rank 8 when absent
        #[arg(value_name = "TYPE")]
        lie_type: Option<String>,
        /// Reproduce the printed generator lists verbatim
        #[arg(long)]
        strict_paper: bool,
    },
    /// Predicted invariants of a compact connected group such as T2xA1xG2
    GroupPredict {
        #[arg(value_name = "SPEC")]
        spec: String,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long)]
        strict_paper: bool,
    },
    /// Number of elements killed by k in the abelianized fundamental group
    Torsion {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value_t = 2)]
        k: u64,
    },
}

fn read_file(p: &PathBuf) -> Result<String> {
    std::fs::read_to_string(p)
        .map_err(|e| Error::Parse(format!("{}: {}", p.display(), e)))
}

impl ComplexArg {
    fn load(&self) -> Result<(SimplicialComplex, Option<SimplicialComplex>)> {
        match (&self.builtin, &self.file) {
            (Some(name), None) => Ok((SimplicialComplex::builtin(name)?, None)),
            (None, Some(p)) => parse_complex_text(&read_file(p)?),
            _ => Err(Error::Parse(
                "give exactly one complex: either --builtin or a file".into(),
            )),
        }
    }

    fn load_single(&self) -> Result<SimplicialComplex> {
        let (k, sub) = self.load()?;
        if sub.is_some() {
            return Err(Error::Parse(
                "this command takes a plain complex, not a pair".into(),
            ));
        }
        Ok(k)
    }
}

impl SecondComplexArg {
    fn load(&self) -> Result<SimplicialComplex> {
        match (&self.with_builtin, &self.with_file) {
            (Some(name), None) => SimplicialComplex::builtin(name),
            (None, Some(p)) => {
                let (k, sub) = parse_complex_text(&read_file(p)?)?;
                if sub.is_some() {
                    return Err(Error::Parse("the second complex must not be a pair".into()));
                }
                Ok(k)
            }
            _ => Err(Error::Parse(
                "give exactly one second complex: --with or --with-builtin".into(),
            )),
        }
    }
}

fn load_subcomplex(rel: &PathBuf) -> Result<SimplicialComplex> {
    let (k, sub) = parse_complex_text(&read_file(rel)?)?;
    if sub.is_some() {
        return Err(Error::Parse("the subcomplex file must not be a pair".into()));
    }
    Ok(k)
}

fn load_self_map(k: &SimplicialComplex, p: &PathBuf) -> Result<SimplicialMap> {
    parse_map_text(&read_file(p)?, k, k)
}

/// Group rendering that names the coefficients: plain display over the
/// integers, dimension notation over a field.
fn group_str(coeff: Coefficients, g: &HomologyGroup) -> String {
    match coeff {
        Coefficients::Z => g.to_string(),
        _ => match g.betti {
            0 => "0".to_string(),
            1 => format!("{}", coeff),
            b => format!("{}^{}", coeff, b),
        },
    }
}

fn render_groups(
    out: &mut String,
    fmt: Format,
    letter: &str,
    coeff: Coefficients,
    groups: &[HomologyGroup],
) {
    for g in groups {
        match fmt {
            Format::Text => {
                let _ = writeln!(out, "{}_{} = {}", letter, g.degree, group_str(coeff, g));
            }
            Format::Tsv => {
                let _ = writeln!(out, "{}\t{}", g.degree, group_str(coeff, g));
            }
        }
    }
}

fn render_report(out: &mut String, fmt: Format, r: &Report) -> bool {
    if fmt == Format::Text {
        let _ = writeln!(out, "{}", r.title);
    }
    for item in &r.items {
        let verdict = if item.pass { "ok" } else { "FAIL" };
        match fmt {
            Format::Text => {
                if item.detail.is_empty() {
                    let _ = writeln!(out, "[{:>4}] {}", verdict, item.label);
                } else {
                    let _ = writeln!(out, "[{:>4}] {}: {}", verdict, item.label, item.detail);
                }
            }
            Format::Tsv => {
                let _ = writeln!(out, "{}\t{}\t{}", verdict, item.label, item.detail);
            }
        }
    }
    r.passed()
}

fn parse_coeff(s: &str) -> Result<Coefficients> {
    s.parse()
}

fn field_coeff(s: &str) -> Result<Coefficients> {
    let c = parse_coeff(s)?;
    if c == Coefficients::Z {
        return Err(Error::Parse(
            "this command needs field coefficients: Q or F<p>".into(),
        ));
    }
    Ok(c)
}

/// Relative homology groups of a pair in the requested coefficients.
fn relative_groups(
    pair: &SimplicialPair,
    coeff: Coefficients,
) -> Result<Vec<HomologyGroup>> {
    let cx = relative_chain_complex(pair);
    match coeff {
        Coefficients::Z => Ok(integral_homology(&cx).groups),
        Coefficients::Q => {
            let fh = field_homology(&Rationals, &cx)?;
            Ok(dims_to_groups(&fh.dims))
        }
        Coefficients::Fp(p) => {
            let f = PrimeField::new(p)?;
            let fh = field_homology(&f, &cx)?;
            Ok(dims_to_groups(&fh.dims))
        }
    }
}

fn dims_to_groups(dims: &[usize]) -> Vec<HomologyGroup> {
    dims.iter()
        .enumerate()
        .map(|(q, &d)| HomologyGroup { degree: q, betti: d, torsion: Vec::new() })
        .collect()
}

fn ring_output<F: Field>(field: &F, k: &SimplicialComplex, fmt: Format) -> Result<(String, bool)> {
    let fh = field_homology(field, &chain_complex(k, false))?;
    let ring = ring_structure(field, k, &fh);
    let mut out = String::new();
    let dims: Vec<String> = ring.dims.iter().map(|d| d.to_string()).collect();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "graded dimensions over {}: {}", field.name(), dims.join(","));
        }
        Format::Tsv => {
            let _ = writeln!(out, "dims\t{}", dims.join(","));
        }
    }
    for ((p, i, q, j), coords) in &ring.products {
        let mut terms = Vec::new();
        for (t, c) in coords.iter().enumerate() {
            if !field.is_zero(c) {
                terms.push(format!("{}*x{}_{}", field.display(c), p + q, t));
            }
        }
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        match fmt {
            Format::Text => {
                let _ = writeln!(out, "x{}_{} x{}_{} = {}", p, i, q, j, rhs);
            }
            Format::Tsv => {
                let _ = writeln!(out, "x{}_{}\tx{}_{}\t{}", p, i, q, j, rhs);
            }
        }
    }
    match exterior_generator_degrees(&ring.dims) {
        Some(degs) => {
            let degs: Vec<String> = degs.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "free exterior ring on generator degrees {}", degs.join(","));
        }
        None => {
            let _ = writeln!(out, "graded dimensions do not match a free exterior ring");
        }
    }
    let laws = verify_cup_laws(field, k)?;
    let ok = render_report(&mut out, fmt, &laws);
    Ok((out, ok))
}

fn catalog_row(out: &mut String, fmt: Format, e: &CatalogEntry) {
    let degs: Vec<String> = e.model.degrees().iter().map(|d| d.to_string()).collect();
    let sum = if e.sum_matches_dim { "ok" } else { "FAIL" };
    let parity = if e.parity_matches { "ok" } else { "FAIL" };
    match fmt {
        Format::Text => {
            let _ = writeln!(
                out,
                "{:<4} rank {:>2} dim {:>4} degrees {:<24} sum {:<4} parity {}",
                e.model.label(),
                e.rank,
                e.dim,
                degs.join(","),
                sum,
                parity
            );
        }
        Format::Tsv => {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                e.model.label(),
                e.rank,
                e.dim,
                degs.join(","),
                sum,
                parity
            );
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let fmt = cli.format;
    let mut out = String::new();
    let mut ok = true;
    match &cli.command {
        Command::Homology { complex, coeff, reduced, rel } => {
            let coeff = parse_coeff(coeff)?;
            let (k, inline_sub) = complex.load()?;
            let sub = match (rel, inline_sub) {
                (Some(_), Some(_)) => {
                    return Err(Error::Parse(
                        "the pair is given twice: inline and with --rel".into(),
                    ))
                }
                (Some(p), None) => Some(load_subcomplex(p)?),
                (None, s) => s,
            };
            match sub {
                Some(sub) => {
                    if *reduced {
                        return Err(Error::Parse(
                            "relative homology is never reduced".into(),
                        ));
                    }
                    let pair = SimplicialPair::new(k, sub)?;
                    let groups = relative_groups(&pair, coeff)?;
                    render_groups(&mut out, fmt, "H", coeff, &groups);
                }
                None => {
                    let groups = homology_groups(&k, coeff, *reduced)?;
                    render_groups(&mut out, fmt, "H", coeff, &groups);
                }
            }
        }
        Command::Cohomology { complex, coeff } => {
            let coeff = parse_coeff(coeff)?;
            let k = complex.load_single()?;
            let groups = match coeff {
                Coefficients::Z => integral_cohomology_groups(&k)?,
                Coefficients::Q => {
                    let fh = field_homology(&Rationals, &chain_complex(&k, false))?;
                    dims_to_groups(&fh.dims)
                }
                Coefficients::Fp(p) => {
                    let f = PrimeField::new(p)?;
                    let fh = field_homology(&f, &chain_complex(&k, false))?;
                    dims_to_groups(&fh.dims)
                }
            };
            render_groups(&mut out, fmt, "H^", coeff, &groups);
        }
        Command::Ring { complex, coeff } => {
            let coeff = field_coeff(coeff)?;
            let k = complex.load_single()?;
            let (text, passed) = match coeff {
                Coefficients::Q => ring_output(&Rationals, &k, fmt)?,
                Coefficients::Fp(p) => ring_output(&PrimeField::new(p)?, &k, fmt)?,
                Coefficients::Z => unreachable!(),
            };
            out.push_str(&text);
            ok = passed;
        }
        Command::Euler { complex } => {
            let k = complex.load_single()?;
            let e = euler_three_ways(&k)?;
            match fmt {
                Format::Text => {
                    let _ = writeln!(out, "from the f-vector: {}", e.from_f_vector);
                    let _ = writeln!(out, "from Betti numbers: {}", e.from_betti);
                    let _ = writeln!(out, "from induced traces: {}", e.from_traces);
                    let _ = writeln!(out, "agree: {}", if e.agree() { "yes" } else { "NO" });
                }
                Format::Tsv => {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        e.from_f_vector,
                        e.from_betti,
                        e.from_traces,
                        if e.agree() { "ok" } else { "FAIL" }
                    );
                }
            }
            ok = e.agree();
            // parity constraints apply when the complex is a pseudomanifold,
            // possibly with boundary
            match parity_report(&k) {
                Ok(r) => ok &= render_report(&mut out, fmt, &r),
                Err(Error::NotPseudomanifold(_)) => {}
                Err(err) => return Err(err),
            }
        }
        Command::Pi1 { complex } => {
            let k = complex.load_single()?;
            let p = edge_path_group(&k)?;
            let ab = abelianization(&p);
            let _ = writeln!(out, "presentation: {}", p);
            let _ = writeln!(
                out,
                "generators: {} relators: {}",
                p.generators.len(),
                p.relators.len()
            );
            let _ = writeln!(out, "abelianization: {}", ab);
        }
        Command::Hurewicz { complex } => {
            let k = complex.load_single()?;
            let r = verify_hurewicz(&k)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Orient { complex } => {
            let k = complex.load_single()?;
            let n = closed_pseudomanifold_dim(&k)?;
            let _ = writeln!(out, "closed pseudomanifold of dimension {}", n);
            match orient_signs(&k, false) {
                Ok(signs) => {
                    let s: Vec<&str> =
                        signs.iter().map(|&v| if v > 0 { "+" } else { "-" }).collect();
                    let _ = writeln!(out, "orientable: yes");
                    let _ = writeln!(out, "facet signs: {}", s.join(""));
                }
                Err(Error::NotOrientable) => {
                    let _ = writeln!(out, "orientable: no");
                }
                Err(e) => return Err(e),
            }
            let hz = homology_groups(&k, Coefficients::Z, false)?;
            let _ = writeln!(out, "top homology over Z: {}", hz[n]);
            let hf = homology_groups(&k, Coefficients::Fp(2), false)?;
            let _ = writeln!(
                out,
                "top homology over F2: {}",
                group_str(Coefficients::Fp(2), &hf[n])
            );
        }
        Command::Duality { complex, coeff } => {
            let coeff = field_coeff(coeff)?;
            let k = complex.load_single()?;
            let r = match coeff {
                Coefficients::Q => poincare_pairing_report(&Rationals, &k)?,
                Coefficients::Fp(p) => poincare_pairing_report(&PrimeField::new(p)?, &k)?,
                Coefficients::Z => unreachable!(),
            };
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Degree { complex, map } => {
            let k = complex.load_single()?;
            let f = load_self_map(&k, map)?;
            let d = degree(&f)?;
            let _ = writeln!(out, "degree: {}", d);
        }
        Command::Lefschetz { complex, map } => {
            let k = complex.load_single()?;
            let f = load_self_map(&k, map)?;
            let (l, report) = hopf_trace_report(&f)?;
            let _ = writeln!(out, "alternating trace: {}", l);
            let _ = writeln!(out, "chain level trace: {}", chain_trace(&f)?);
            ok = render_report(&mut out, fmt, &report);
            let (_, statement) = fixed_point_certificate(&f)?;
            let _ = writeln!(out, "{}", statement);
        }
        Command::Coincidence { complex, map } => {
            let k = complex.load_single()?;
            if map.len() < 2 || map.len() > 3 {
                return Err(Error::Parse("give --map two or three times".into()));
            }
            let f = load_self_map(&k, &map[0])?;
            let g = load_self_map(&k, &map[1])?;
            let h = match map.get(2) {
                Some(p) => load_self_map(&k, p)?,
                None => SimplicialMap::identity(&k),
            };
            let _ = writeln!(out, "coincidence number: {}", coincidence_number(&f, &g)?);
            let r = coincidence_identities_report(&f, &g, &h)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Separation { n, embed } => {
            let which = match embed {
                Embed::Equator => EmbeddedSphere::Equator,
                Embed::Facet => EmbeddedSphere::FacetBoundary,
            };
            let r = separation_report(*n, which)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Kunneth { complex, second } => {
            let k = complex.load_single()?;
            let l = second.load()?;
            let r = verify_kunneth(&k, &l)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Uct { complex, primes } => {
            let k = complex.load_single()?;
            let primes = if primes.is_empty() { vec![2, 3, 5] } else { primes.clone() };
            let r = verify_uct(&k, &primes)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Les { complex, rel } => {
            let (k, inline_sub) = complex.load()?;
            if inline_sub.is_some() {
                return Err(Error::Parse(
                    "the pair is given twice: inline and with --rel".into(),
                ));
            }
            let sub = load_subcomplex(rel)?;
            let pair = SimplicialPair::new(k, sub)?;
            let r = verify_les(&pair)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Mv { complex, cover } => {
            let k = complex.load_single()?;
            if cover.len() != 2 {
                return Err(Error::Parse("give --cover exactly twice".into()));
            }
            let a = load_subcomplex(&cover[0])?;
            let b = load_subcomplex(&cover[1])?;
            let r = verify_mayer_vietoris(&k, &a, &b)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Product { complex, second } => {
            let k = complex.load_single()?;
            let l = second.load()?;
            out.push_str(&render_complex_text(&k.product(&l)));
        }
        Command::Subdivide { complex, times } => {
            if *times > 4 {
                return Err(Error::RangeError("at most 4 subdivisions".into()));
            }
            let mut k = complex.load_single()?;
            for _ in 0..*times {
                k = k.barycentric_subdivision();
            }
            out.push_str(&render_complex_text(&k));
        }
        Command::Catalog { lie_type, strict_paper } => {
            let mode = if *strict_paper {
                CatalogMode::StrictPaper
            } else {
                CatalogMode::SigmaConsistent
            };
            let entries = match lie_type {
                Some(s) => vec![catalog_entry(LieType::parse(s)?, mode)?],
                None => full_catalog(mode, 8)?,
            };
            for e in &entries {
                catalog_row(&mut out, fmt, e);
                if !(e.sum_matches_dim && e.parity_matches) {
                    ok = false;
                }
            }
        }
        Command::GroupPredict { spec, k, strict_paper } => {
            let mode = if *strict_paper {
                CatalogMode::StrictPaper
            } else {
                CatalogMode::SigmaConsistent
            };
            let g = parse_group_spec(spec, mode)?;
            let r = group_prediction(&g, *k)?;
            ok = render_report(&mut out, fmt, &r);
        }
        Command::Torsion { complex, k } => {
            let kx = complex.load_single()?;
            let p = edge_path_group(&kx)?;
            let ab = abelianization(&p);
            let count = torsion_count(&ab, *k)?;
            let _ = writeln!(out, "abelianization: {}", ab);
            let _ = writeln!(out, "elements killed by {}: {}", k, count);
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{}", out);
            if ok {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
