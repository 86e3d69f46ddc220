//! Command-line front end: builds presentations, runs the verification
//! toolchain, and emits DOT/CSV/JSON artifacts, all byte-deterministically.
//!
//! Exit codes: `0` success (and all requested checks passed), `1` a check or
//! verification failed (or an internal consistency error surfaced), `2` the
//! request itself was invalid — bad flags, bad parameters, unsupported or
//! oversized inputs.

use clap::{Parser, Subcommand, ValueEnum};

use discgroup::abelian::abelianize;
use discgroup::checks::run_all_checks;
use discgroup::coset::{enumerate_cosets, CosetResult};
use discgroup::critical::{hl_critical_values, Complex64, DEFAULT_TOL};
use discgroup::degrees::degree_report;
use discgroup::lattice::Graph;
use discgroup::presentation::{
    present_with, present_zariski, AsymptoteForm, Labeling, PresentOptions,
};
use discgroup::smoothing::{smooth, SmoothingKind};
use discgroup::{Error, Params, Variant};

#[derive(Parser)]
#[command(
    name = "discgroup",
    version,
    about = "Presentations of fundamental groups of discriminant complements",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation for parameters (n, d)
    Present {
        n: u32,
        d: u32,
        /// Affine complement instead of the projective one
        #[arg(long, conflicts_with = "zariski")]
        affine: bool,
        /// Classical plane-curve braid-monodromy presentation (n = 1 only)
        #[arg(long)]
        zariski: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// How generator labels relate to the enumeration order
        #[arg(long, value_enum, default_value = "reverse-enumeration")]
        labeling: LabelingArg,
        /// Which shape of the asymptote relations to emit
        #[arg(long, value_enum, default_value = "power-swap")]
        asymptote_form: AsymptoteArg,
        /// Emit all six vertex orderings of each triangle relation
        #[arg(long)]
        all_triangle_orderings: bool,
    },
    /// Print the intersection graph (summary or DOT)
    Graph {
        n: u32,
        d: u32,
        /// Emit Graphviz DOT instead of a summary
        #[arg(long)]
        dot: bool,
    },
    /// Print the abelianization of the fundamental group
    Abelianize {
        n: u32,
        d: u32,
        #[arg(long, conflicts_with = "zariski")]
        affine: bool,
        /// Abelianize the plane-curve presentation (n = 1 only)
        #[arg(long)]
        zariski: bool,
    },
    /// Compute the group order by coset enumeration (projective variant)
    Order {
        n: u32,
        d: u32,
        /// Abort once this many cosets have been defined
        #[arg(long, default_value_t = 1_000_000)]
        max_cosets: usize,
    },
    /// Quotient describing a partial smoothing of the discriminant
    Smooth {
        n: u32,
        d: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Re-verify the quotient: abelianization order and certificates
        #[arg(long)]
        verify: bool,
    },
    /// Print the exact degree report of the discriminant polynomial
    Degrees {
        n: u32,
        d: u32,
        #[arg(long)]
        json: bool,
    },
    /// Critical values of the perturbed Fermat polynomial, as CSV
    HlValues {
        d: u32,
        /// Perturbation parameters v_1 … v_n (real, nonzero)
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        v: Vec<f64>,
        /// Run a geometric consistency check instead of printing values
        #[arg(long, value_enum)]
        check: Option<CheckArg>,
    },
    /// Run the full verification suite for (n, d)
    CheckAll {
        n: u32,
        d: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Cas,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    ReverseEnumeration,
    EnumerationOrder,
}

#[derive(Clone, Copy, ValueEnum)]
enum AsymptoteArg {
    PowerSwap,
    Centralizer,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cusp,
    Node,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Circles,
    Twist,
}

fn emit(s: &str) {
    print!("{s}");
    if !s.ends_with('\n') {
        println!();
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Internal(_) => 1,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn run(command: Command) -> discgroup::Result<i32> {
    match command {
        Command::Present {
            n,
            d,
            affine,
            zariski,
            format,
            labeling,
            asymptote_form,
            all_triangle_orderings,
        } => {
            let params = Params::new(n, d)?;
            let presentation = if zariski {
                if n != 1 {
                    return Err(Error::Invalid(
                        "--zariski is the plane-curve presentation; it needs n = 1".into(),
                    ));
                }
                present_zariski(d)?
            } else {
                let variant = if affine { Variant::Affine } else { Variant::Projective };
                let opts = PresentOptions {
                    labeling: match labeling {
                        LabelingArg::ReverseEnumeration => Labeling::ReverseEnumeration,
                        LabelingArg::EnumerationOrder => Labeling::EnumerationOrder,
                    },
                    asymptote_form: match asymptote_form {
                        AsymptoteArg::PowerSwap => AsymptoteForm::PowerSwap,
                        AsymptoteArg::Centralizer => AsymptoteForm::Centralizer,
                        AsymptoteArg::Both => AsymptoteForm::Both,
                    },
                    all_triangle_orderings,
                };
                present_with(params, variant, &opts)?
            };
            emit(&match format {
                FormatArg::Text => presentation.to_text(),
                FormatArg::Json => presentation.to_json(),
                FormatArg::Cas => presentation.to_cas(),
            });
            Ok(0)
        }
        Command::Graph { n, d, dot } => {
            let graph = Graph::build(Params::new(n, d)?)?;
            if dot {
                emit(&graph.to_dot());
            } else {
                println!(
                    "graph (n={n}, d={d}): {} vertices, {} edges, {} triangles, {} non-edges, {}",
                    graph.vertex_count(),
                    graph.edges.len(),
                    graph.triangles.len(),
                    graph.non_edges.len(),
                    if graph.is_connected() {
                        "connected"
                    } else {
                        "disconnected"
                    }
                );
            }
            Ok(0)
        }
        Command::Abelianize {
            n,
            d,
            affine,
            zariski,
        } => {
            let params = Params::new(n, d)?;
            let presentation = if zariski {
                if n != 1 {
                    return Err(Error::Invalid(
                        "--zariski is the plane-curve presentation; it needs n = 1".into(),
                    ));
                }
                present_zariski(d)?
            } else {
                let variant = if affine { Variant::Affine } else { Variant::Projective };
                present_with(params, variant, &PresentOptions::default())?
            };
            println!("{}", abelianize(&presentation)?.invariants);
            Ok(0)
        }
        Command::Order { n, d, max_cosets } => {
            let presentation =
                present_with(Params::new(n, d)?, Variant::Projective, &PresentOptions::default())?;
            match enumerate_cosets(&presentation, &[], max_cosets)? {
                CosetResult::Complete { order, .. } => {
                    println!("{order}");
                    Ok(0)
                }
                CosetResult::BoundExceeded { max_cosets } => {
                    eprintln!("no finite order found within {max_cosets} cosets");
                    Ok(1)
                }
            }
        }
        Command::Smooth { n, d, kind, verify } => {
            let params = Params::new(n, d)?;
            let kind = match kind {
                KindArg::Cusp => SmoothingKind::Cusp,
                KindArg::Node => SmoothingKind::Node,
            };
            let smoothing = smooth(params, kind)?;
            emit(&smoothing.to_text());
            if verify {
                let mut failed = false;
                let expected = (u64::from(n) + 1) * params.vertex_count() as u64;
                let invariants = abelianize(&smoothing.presentation)?.invariants;
                let ab_ok = invariants.free_rank == 0
                    && invariants.torsion == vec![expected.into()];
                failed |= !ab_ok;
                println!(
                    "{} abelianization: {} (expected Z/{})",
                    if ab_ok { "PASS" } else { "FAIL" },
                    invariants,
                    expected
                );
                for certificate in &smoothing.certificates {
                    println!("PASS {}: {}", certificate.name, certificate.detail);
                }
                if failed {
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Degrees { n, d, json } => {
            let report = degree_report(Params::new(n, d)?)?;
            emit(&if json { report.to_json() } else { report.to_text() });
            Ok(0)
        }
        Command::HlValues { d, v, check } => {
            let parameters: Vec<Complex64> =
                v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            let set = hl_critical_values(d, &parameters)?;
            match check {
                None => {
                    emit(&set.to_csv());
                    Ok(0)
                }
                Some(CheckArg::Circles) => {
                    let ok = set.check_circles(DEFAULT_TOL)?;
                    println!(
                        "{} circles: values lie on circles of radius (d-1)|v_n|^(d/(d-1)) \
                         around the parent values",
                        if ok { "PASS" } else { "FAIL" }
                    );
                    Ok(if ok { 0 } else { 1 })
                }
                Some(CheckArg::Twist) => {
                    let mut ok = true;
                    for kappa in 1..=set.params.n {
                        let this = set.check_twist(kappa, DEFAULT_TOL)?;
                        ok &= this;
                        println!(
                            "{} twist v_{kappa}: value set invariant under a d-th root of unity",
                            if this { "PASS" } else { "FAIL" }
                        );
                    }
                    Ok(if ok { 0 } else { 1 })
                }
            }
        }
        Command::CheckAll { n, d, json } => {
            let report = run_all_checks(Params::new(n, d)?)?;
            emit(&if json { report.to_json() } else { report.to_text() });
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}
