use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use scrows::algebra::{h_polynomial, homology_dims, HConvention};
use scrows::complex::minimal_nonfaces;
use scrows::counting::ie_cardinality;
use scrows::fsm::{
    closed_sets, frequency_table, probability_query, support_class_partition, Database,
    Probability, ProbabilityQuery,
};
use scrows::partition::{link_parts, link_via_facets, maximize, TargetFunction};
use scrows::{FacetFamily, NonfaceFamily};

use crate::engine::{self, Mode};
use crate::error::CliError;
use crate::io;
use crate::oracle;
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "scrows", version, about = "Simplicial complexes as disjoint unions of wildcard rows")]
pub struct Cli {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Spread independent work over all cores. Rows may come out in a
    /// different order or number; counts are unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Ie,
    Partition,
    FvectorSum,
    All,
}

#[derive(Debug, Args)]
pub struct FacetsArg {
    /// Facet file.
    pub facets: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of faces (including the empty face).
    Count {
        facets: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        route: Route,
    },
    /// Face numbers f_k (faces with k elements) and non-face numbers tau_k.
    Fvector(FacetsArg),
    /// Disjoint rows covering the complex.
    Partition {
        #[arg(required_unless_present = "nonfaces", conflicts_with = "nonfaces")]
        facets: Option<PathBuf>,
        /// Start from a file of minimal non-faces instead of facets.
        #[arg(long, value_name = "GENERATORS")]
        nonfaces: Option<PathBuf>,
    },
    /// Minimal non-faces, in set-file format.
    Nonfaces(FacetsArg),
    /// Link of a face.
    Link {
        facets: PathBuf,
        /// Comma-separated positions, e.g. 6,7,10,11.
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        /// Partition the link from its own facets instead.
        #[arg(long)]
        via_facets: bool,
    },
    /// Maximum of a linear target over the faces.
    Maximize {
        facets: PathBuf,
        /// File of `position weight` lines.
        #[arg(long)]
        weights: PathBuf,
    },
    /// h-polynomial coefficients.
    Hpoly {
        facets: PathBuf,
        /// Degree d (defaults to the largest facet size).
        #[arg(long)]
        degree: Option<usize>,
        /// Evaluate the alternative literal form sum_{i>=1} f_{i-1} t^i (1-t)^(w-i).
        #[arg(long)]
        verbatim: bool,
    },
    /// Reduced homology dimensions over GF(p).
    Homology {
        facets: PathBuf,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    /// Potentially nonzero terms of an inclusion-exclusion expansion.
    IeTerms {
        /// Minimal index sets whose terms vanish.
        generators: PathBuf,
        /// Number of properties.
        #[arg(long)]
        m: usize,
    },
    /// Frequent-set statistics of a transaction file.
    #[command(subcommand)]
    Fsm(FsmCommand),
    /// Exhaustive reference computations (small w only).
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time partitioning and the f-vector.
    Bench {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        facets: Option<PathBuf>,
        /// Random instance of h facets of size m over w positions: `w,h,m`.
        #[arg(long, value_name = "W,H,M", value_parser = parse_triple)]
        random: Option<(usize, usize, usize)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Query {
    /// P(X is s+-frequent | |X| = k).
    FrequentGivenSize,
    /// P(|X| = k | X is s+-frequent, X nonempty).
    SizeGivenFrequent,
    /// P(X is s-frequent | X is s+-frequent, |X| >= k).
    ExactGivenFrequent,
}

#[derive(Debug, Subcommand)]
pub enum FsmCommand {
    /// fr(s, k) with row and column sums.
    Table { transactions: PathBuf },
    /// Closed sets in lectic order.
    Closed {
        transactions: PathBuf,
        #[arg(short)]
        s: usize,
    },
    /// One of three probability queries.
    Prob {
        transactions: PathBuf,
        #[arg(short)]
        s: usize,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum)]
        query: Query,
        /// Decimal places in the approximation.
        #[arg(long, default_value_t = 4)]
        places: usize,
    },
    /// Rows of the support class of a closed set.
    Class {
        transactions: PathBuf,
        #[arg(short)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Count(FacetsArg),
    Fvector(FacetsArg),
    Nonfaces(FacetsArg),
    Link {
        facets: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        face: String,
    },
    Maximize {
        facets: PathBuf,
        #[arg(long)]
        weights: PathBuf,
    },
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [w, h, m] = parts[..] else {
        return Err("expected three comma-separated integers w,h,m".into());
    };
    let num = |t: &str| t.parse::<usize>().map_err(|_| format!("not an integer: {t:?}"));
    Ok((num(w)?, num(h)?, num(m)?))
}

pub fn load_facets(path: &Path) -> Result<FacetFamily, CliError> {
    let file = io::load_set_file(path)?;
    let f = FacetFamily::new(file.ground, file.sets).map_err(CliError::from_input)?;
    if f.dropped() > 0 {
        eprintln!(
            "warning: {}: {} facet(s) contained in another facet or repeated; dropped",
            path.display(),
            f.dropped()
        );
    }
    Ok(f)
}

pub fn load_nonfaces(path: &Path) -> Result<NonfaceFamily, CliError> {
    let file = io::load_set_file(path)?;
    let n = file.sets.len();
    let g = NonfaceFamily::new(file.ground, file.sets).map_err(CliError::from_input)?;
    if g.len() < n {
        eprintln!(
            "warning: {}: {} generator(s) contain another generator; dropped",
            path.display(),
            n - g.len()
        );
    }
    Ok(g)
}

pub fn load_database(path: &Path) -> Result<Database, CliError> {
    let file = io::load_set_file(path)?;
    Database::new(file.ground, file.sets).map_err(CliError::from_input)
}

fn load_weights(path: &Path, w: usize) -> Result<TargetFunction, CliError> {
    let text = io::read_to_string(path)?;
    let weights = io::parse_weights(&text, w).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok(TargetFunction::new(weights))
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let mode = if cli.parallel { Mode::Parallel } else { Mode::Sequential };
    match &cli.command {
        Command::Count { facets, route } => count(&load_facets(facets)?, *route, mode),
        Command::Fvector(a) => {
            let f = load_facets(&a.facets)?;
            let (_, tau, fv) = engine::tau_and_faces(&f, mode);
            Ok(Report::FVector(FVectorReport::new(&fv, Some(&tau))))
        }
        Command::Partition { facets, nonfaces } => {
            let p = match (facets, nonfaces) {
                (Some(path), None) => engine::facet_partition(&load_facets(path)?, mode),
                (None, Some(path)) => engine::nonface_partition(&load_nonfaces(path)?, mode),
                _ => return Err(CliError::Usage("give either a facet file or --nonfaces".into())),
            };
            Ok(Report::Partition(PartitionReport::new(&p)))
        }
        Command::Nonfaces(a) => {
            let f = load_facets(&a.facets)?;
            let g = minimal_nonfaces(&f).map_err(CliError::from_input)?;
            Ok(Report::Sets(SetsReport::new(f.width(), g.generators())))
        }
        Command::Link {
            facets,
            face,
            via_facets,
        } => {
            let f = load_facets(facets)?;
            let x = io::parse_face_arg(face, f.ground())?;
            if *via_facets {
                let l = link_via_facets(&f, &x).map_err(CliError::from_arg)?;
                return Ok(Report::Link(LinkReport {
                    face: x.to_vec(),
                    disjoint_rows: None,
                    minus_rows: None,
                    empty_intersections: None,
                    link: PartitionReport::new(&l),
                }));
            }
            let p = engine::facet_partition(&f, mode);
            let parts = link_parts(&p, &f, &x).map_err(CliError::from_arg)?;
            Ok(Report::Link(LinkReport {
                face: x.to_vec(),
                disjoint_rows: Some(parts.disjoint.len()),
                minus_rows: Some(parts.minus.len()),
                empty_intersections: Some(parts.empty_intersections()),
                link: PartitionReport::new(&parts.link),
            }))
        }
        Command::Maximize { facets, weights } => {
            let f = load_facets(facets)?;
            let t = load_weights(weights, f.width())?;
            let p = engine::facet_partition(&f, mode);
            let (value, x) = maximize(&p, &t).map_err(CliError::from_input)?;
            Ok(Report::Maximize(MaximizeReport {
                value,
                witness: x.to_vec(),
            }))
        }
        Command::Hpoly {
            facets,
            degree,
            verbatim,
        } => {
            let f = load_facets(facets)?;
            let (_, _, fv) = engine::tau_and_faces(&f, mode);
            let (conv, d) = if *verbatim {
                (HConvention::Verbatim, f.width())
            } else {
                (HConvention::Standard, degree.unwrap_or_else(|| f.dimension_bound()))
            };
            if *verbatim && degree.is_some() {
                return Err(CliError::Usage("--degree has no effect with --verbatim".into()));
            }
            let h = h_polynomial(&fv, d, conv).map_err(CliError::from_arg)?;
            let mut coefficients: Vec<String> = h.coeffs().iter().map(|c| c.to_string()).collect();
            if coefficients.is_empty() {
                coefficients.push("0".into());
            }
            Ok(Report::HPoly(HPolyReport {
                d,
                convention: if *verbatim { "verbatim" } else { "standard" }.into(),
                coefficients,
            }))
        }
        Command::Homology { facets, prime } => {
            let f = load_facets(facets)?;
            let h = homology_dims(&f, *prime).map_err(CliError::from_arg)?;
            Ok(Report::Homology(HomologyReport::new(&h)))
        }
        Command::IeTerms { generators, m } => {
            let g = load_nonfaces(generators)?;
            if g.width() != *m {
                return Err(CliError::Usage(format!(
                    "--m {m} does not match the file's ground set size {}",
                    g.width()
                )));
            }
            let p = engine::nonface_partition(&g, mode);
            let terms = engine::card_k(&p, mode);
            Ok(Report::IeTerms(IeTermsReport {
                m: *m,
                terms: terms.iter().map(|t| t.to_string()).collect(),
                partition: PartitionReport::new(&p),
            }))
        }
        Command::Fsm(c) => fsm(c),
        Command::Oracle(c) => oracle::run(c),
        Command::Bench {
            facets,
            random,
            seed,
        } => {
            let (f, m, seed) = match (facets, random) {
                (Some(path), None) => (load_facets(path)?, None, None),
                (None, Some((w, h, m))) => {
                    let f = crate::bench::random_facets(*w, *h, *m, *seed).map_err(CliError::from_arg)?;
                    (f, Some(*m), Some(*seed))
                }
                _ => return Err(CliError::Usage("give either a facet file or --random".into())),
            };
            let mut r = crate::bench::run(&f, mode);
            r.m = m;
            r.seed = seed;
            Ok(Report::Bench(r))
        }
    }
}

fn count(f: &FacetFamily, route: Route, mode: Mode) -> Result<Report, CliError> {
    let want = |r: Route| route == r || route == Route::All;
    let ie = if want(Route::Ie) {
        match ie_cardinality(f) {
            Ok(v) => Some(v),
            Err(e @ scrows::Error::GuardExceeded { .. }) if route == Route::All => {
                eprintln!("note: inclusion-exclusion route skipped: {e}");
                None
            }
            Err(e) => return Err(CliError::from_input(e)),
        }
    } else {
        None
    };
    let partition = want(Route::Partition).then(|| engine::facet_partition(f, mode));
    let tau_f = want(Route::FvectorSum).then(|| engine::tau_and_faces(f, mode));
    let fsum = tau_f.as_ref().map(|(_, _, fv)| fv.total());
    let pcard = partition.as_ref().map(|p| p.cardinality());
    let all: Vec<&BigUint> = [ie.as_ref(), pcard.as_ref(), fsum.as_ref()].into_iter().flatten().collect();
    // the routes are independent; disagreement is a bug, not an input problem
    assert!(
        all.windows(2).all(|p| p[0] == p[1]),
        "counting routes disagree: ie {ie:?}, partition {pcard:?}, fvector-sum {fsum:?}"
    );
    let count = all.first().map(|v| v.to_string()).unwrap_or_default();
    Ok(Report::Count(CountReport {
        w: f.width(),
        count,
        ie: ie.map(|v| v.to_string()),
        partition: pcard.map(|v| v.to_string()),
        fvector_sum: fsum.map(|v| v.to_string()),
        tau_sum: tau_f.as_ref().map(|(_, tau, _)| tau.total().to_string()),
        rows: partition.as_ref().map(|p| p.len()),
    }))
}

fn fsm(c: &FsmCommand) -> Result<Report, CliError> {
    match c {
        FsmCommand::Table { transactions } => {
            let d = load_database(transactions)?;
            let t = frequency_table(&d).map_err(CliError::from_input)?;
            Ok(Report::FsmTable(FsmTableReport::new(&t)))
        }
        FsmCommand::Closed { transactions, s } => {
            let d = load_database(transactions)?;
            let closed = closed_sets(&d, *s).map_err(CliError::from_arg)?;
            Ok(Report::Closed(ClosedReport {
                s: *s,
                closed: closed.iter().map(|x| x.to_vec()).collect(),
            }))
        }
        FsmCommand::Prob {
            transactions,
            s,
            k,
            query,
            places,
        } => {
            let d = load_database(transactions)?;
            let t = frequency_table(&d).map_err(CliError::from_input)?;
            let (s, k) = (*s, *k);
            let q = match query {
                Query::FrequentGivenSize => ProbabilityQuery::FrequentGivenSize { s, k },
                Query::SizeGivenFrequent => ProbabilityQuery::SizeGivenFrequent { s, k },
                Query::ExactGivenFrequent => ProbabilityQuery::ExactGivenFrequent { s, min_k: k },
            };
            let p = probability_query(&t, q).map_err(CliError::from_arg)?;
            let name = query
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            let (numerator, denominator, decimal) = match &p {
                Probability::Value(r) => (
                    Some(r.numer().to_string()),
                    Some(r.denom().to_string()),
                    Some(scrows::fsm::decimal(r, *places)),
                ),
                Probability::Undefined => (None, None, None),
            };
            Ok(Report::Probability(ProbabilityReport {
                query: name,
                s,
                k,
                numerator,
                denominator,
                decimal,
            }))
        }
        FsmCommand::Class {
            transactions,
            s,
            set,
        } => {
            let d = load_database(transactions)?;
            let y = io::parse_face_arg(set, d.ground())?;
            let p = support_class_partition(&d, *s, &y).map_err(CliError::from_arg)?;
            Ok(Report::Partition(PartitionReport::new(&p)))
        }
    }
}
