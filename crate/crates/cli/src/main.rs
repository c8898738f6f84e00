use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use posetcon::boolean::{boolean_complementation, enumerate_boolean_congruences, kernel_exclusion};
use posetcon::checks::{run_checks, Suite};
use posetcon::congruence::{congruence_violation, filters, is_strong_filter, kernel, quotient_poset};
use posetcon::heyting::{enumerate_star_congruences, is_deductive_system};
use posetcon::text::{emit_poset, format_classes, format_star_table, parse_classes, read_poset_file};
use posetcon::{
    corpus, dot, enumerate_congruences, enumerate_congruences_bruteforce, ConFamily, PosetDocument, StarTable,
};

/// Congruences of finite posets.
#[derive(Debug, Parser)]
#[command(name = "posetcon", version, about)]
struct Cli {
    /// Fail with exit code 1 unless the poset is relatively pseudocomplemented.
    #[arg(long, global = true)]
    expect_star: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a poset file and summarise its structure.
    Validate { file: PathBuf },
    /// Lower and upper cones of a set of elements.
    Cones {
        file: PathBuf,
        #[arg(required = false)]
        elems: Vec<String>,
    },
    /// The relative pseudocomplement table.
    StarTable { file: PathBuf },
    /// All congruences, one per line.
    Congruences {
        file: PathBuf,
        /// Keep only those compatible with relative pseudocomplementation.
        #[arg(long)]
        star: bool,
        /// Keep only those compatible with complementation.
        #[arg(long)]
        comp: bool,
        /// Enumerate all partitions instead of interval partitions.
        #[arg(long)]
        bruteforce: bool,
    },
    /// The congruences ordered by inclusion.
    ConLattice {
        file: PathBuf,
        /// Emit a Graphviz digraph.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        star: bool,
        #[arg(long)]
        comp: bool,
    },
    /// The quotient poset by a congruence, given by family name (`delta`,
    /// `nabla`, `theta3`) or class list (`[0,a][b,1]`).
    Quotient { file: PathBuf, congruence: String },
    /// Filters of the poset.
    Filters {
        file: PathBuf,
        /// Keep only strong filters.
        #[arg(long)]
        strong: bool,
        /// Keep only deductive systems.
        #[arg(long)]
        deductive: bool,
    },
    /// Congruence kernels and principal filters ruled out as kernels.
    Kernels { file: PathBuf },
    /// Run the structural checks and print a report.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Hasse diagram of the poset as Graphviz.
    Hasse { file: PathBuf },
    /// List the bundled posets.
    Examples,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Poset,
    Heyting,
    Boolean,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Poset => Suite::Poset,
            SuiteArg::Heyting => Suite::Heyting,
            SuiteArg::Boolean => Suite::Boolean,
        }
    }
}

/// Exit 1: a check failed or a requested structure does not exist.
/// Exit 2: bad input.
enum Failure {
    Unsatisfied(String),
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

/// Reads `path`, falling back to the bundled poset named by its file stem.
fn load(path: &Path) -> Result<PosetDocument, Failure> {
    if path.exists() {
        return read_poset_file(path).map_err(|e| input(format!("{}: {e}", path.display())));
    }
    path.file_stem()
        .and_then(|s| s.to_str())
        .and_then(corpus::load)
        .ok_or_else(|| input(format!("{}: no such file or bundled poset", path.display())))
}

fn require_star(doc: &PosetDocument) -> Result<StarTable, Failure> {
    StarTable::derive(&doc.poset).map_err(|(x, y)| {
        let p = &doc.poset;
        Failure::Unsatisfied(format!(
            "{} is not relatively pseudocomplemented: {}*{} does not exist",
            doc.name,
            p.label(x),
            p.label(y)
        ))
    })
}

fn require_comp(doc: &PosetDocument) -> Result<posetcon::Complementation, Failure> {
    boolean_complementation(&doc.poset)
        .ok_or_else(|| Failure::Unsatisfied(format!("{} is not a Boolean poset", doc.name)))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family(doc: &PosetDocument, star: bool, comp: bool, bruteforce: bool) -> Result<ConFamily, Failure> {
    let p = &doc.poset;
    let mut fam = if bruteforce {
        enumerate_congruences_bruteforce(p, posetcon::congruence::DEFAULT_BRUTE_FORCE_LIMIT).map_err(input)?
    } else {
        enumerate_congruences(p)
    };
    if star {
        fam = enumerate_star_congruences(&fam, &require_star(doc)?);
    }
    if comp {
        fam = enumerate_boolean_congruences(&fam, &require_comp(doc)?);
    }
    Ok(fam)
}

fn run(cli: Cli) -> Outcome {
    let doc = match &cli.command {
        Command::Examples => return examples(),
        Command::Validate { file }
        | Command::Cones { file, .. }
        | Command::StarTable { file }
        | Command::Congruences { file, .. }
        | Command::ConLattice { file, .. }
        | Command::Quotient { file, .. }
        | Command::Filters { file, .. }
        | Command::Kernels { file }
        | Command::Check { file, .. }
        | Command::Hasse { file } => load(file)?,
    };
    if cli.expect_star {
        require_star(&doc)?;
    }
    let p = &doc.poset;
    match cli.command {
        Command::Examples => unreachable!(),
        Command::Validate { .. } => {
            println!("poset {}", doc.name);
            println!("elements: {}", p.len());
            println!("covers: {}", p.hasse_edges().len());
            println!("bounded: {}", yes(p.is_bounded()));
            println!("relatively pseudocomplemented: {}", yes(doc.star().is_some()));
            println!("boolean: {}", yes(doc.complementation().is_some()));
        }
        Command::Cones { elems, .. } => {
            let a = p.set_of(&elems).map_err(input)?;
            println!("L = {}", p.fmt_set(p.lower_cone(a)));
            println!("U = {}", p.fmt_set(p.upper_cone(a)));
            println!("Max L = {}", p.fmt_set(p.max_l(a)));
            println!("Min U = {}", p.fmt_set(p.min_u(a)));
        }
        Command::StarTable { .. } => print!("{}", format_star_table(p, &require_star(&doc)?)),
        Command::Congruences { star, comp, bruteforce, .. } => {
            let fam = family(&doc, star, comp, bruteforce)?;
            for (name, m) in fam.names().iter().zip(fam.members()) {
                println!("{name}: {}", format_classes(p, m));
            }
        }
        Command::ConLattice { dot, star, comp, .. } => {
            let fam = family(&doc, star, comp, false)?;
            if dot {
                print!("{}", dot::con_lattice_dot(&doc.name, p, &fam));
                return Ok(());
            }
            let names = fam.names();
            for (name, m) in names.iter().zip(fam.members()) {
                println!("{name}: {}", format_classes(p, m));
            }
            for (a, b) in fam.hasse_edges() {
                println!("{} < {}", names[a], names[b]);
            }
            let lattice = fam.lattice_report();
            match (lattice.missing_meet, lattice.missing_join) {
                (None, None) => println!("lattice: yes"),
                (Some((i, j)), _) => println!("lattice: no (no meet of {} and {})", names[i], names[j]),
                (None, Some((i, j))) => println!("lattice: no (no join of {} and {})", names[i], names[j]),
            }
            let props = fam.properties();
            match props.non_permuting.first() {
                None => println!("permutable: yes"),
                Some(w) => {
                    println!("permutable: no ({} in {}∘{})", pair(&doc, w.pairs[0]), names[w.theta], names[w.phi])
                }
            }
            match props.shared_classes.first() {
                None => println!("regular: yes"),
                Some(s) => {
                    println!("regular: no ({} and {} share {})", names[s.theta], names[s.phi], p.fmt_set(s.class))
                }
            }
            if props.uniform() {
                println!("uniform: yes");
            } else {
                let list: Vec<&str> = props.non_uniform.iter().map(|&i| names[i].as_str()).collect();
                println!("uniform: no ({})", list.join(","));
            }
        }
        Command::Quotient { congruence, .. } => {
            let full = enumerate_congruences(p);
            let theta = match full.names().iter().position(|n| *n == congruence) {
                Some(i) => full.get(i).clone(),
                None => parse_classes(p, &congruence).map_err(input)?,
            };
            if let Some(v) = congruence_violation(p, &theta) {
                return Err(Failure::Unsatisfied(format!(
                    "not a congruence: {:?} fails on {} and {}",
                    v.operator,
                    pair(&doc, v.left),
                    pair(&doc, v.right)
                )));
            }
            let q = quotient_poset(p, &theta).map_err(input)?;
            print!("{}", emit_poset(&format!("{}-quotient", doc.name), &q.poset));
            println!("# greatest-element order agrees: {}", yes(q.greatest_order_agrees(p)));
        }
        Command::Filters { strong, deductive, .. } => {
            let star = if deductive { Some(require_star(&doc)?) } else { None };
            for f in filters(p) {
                if strong && !is_strong_filter(p, f) {
                    continue;
                }
                if let Some(star) = &star {
                    if !is_deductive_system(p, star, f) {
                        continue;
                    }
                }
                println!("{}", p.fmt_set(f));
            }
        }
        Command::Kernels { .. } => {
            if p.top().is_none() {
                return Err(Failure::Unsatisfied(format!("{} has no top element", doc.name)));
            }
            let fam = enumerate_congruences(p);
            for (name, m) in fam.names().iter().zip(fam.members()) {
                println!("{name}: kernel {}", p.fmt_set(kernel(p, m).map_err(input)?));
            }
            let comp = doc.complementation();
            for a in 0..p.len() {
                let ex = kernel_exclusion(p, comp.as_ref(), a).map_err(input)?;
                if !ex.excluded() {
                    continue;
                }
                let labels = |v: &[usize]| v.iter().map(|&b| p.label(b)).collect::<Vec<_>>().join(",");
                let mut line = format!("excluded [{},1]:", p.label(a));
                if !ex.via_lower.is_empty() {
                    line.push_str(&format!(" lower b={}", labels(&ex.via_lower)));
                }
                if !ex.via_upper.is_empty() {
                    line.push_str(&format!(" upper b={}", labels(&ex.via_upper)));
                }
                println!("{line}");
            }
        }
        Command::Check { suite, .. } => {
            let report = run_checks(&doc.name, p, suite.into());
            print!("{report}");
            if !report.all_passed() {
                return Err(Failure::Unsatisfied(format!("{} check(s) failed", report.failed())));
            }
        }
        Command::Hasse { .. } => print!("{}", dot::poset_dot(&doc.name, p)),
    }
    Ok(())
}

fn pair(doc: &PosetDocument, (x, y): (usize, usize)) -> String {
    format!("({},{})", doc.poset.label(x), doc.poset.label(y))
}

fn examples() -> Outcome {
    for name in corpus::names() {
        let doc = corpus::load(name).expect("bundled");
        let note = if corpus::REFERENCE_LATTICES.contains(&name) { " (reference lattice)" } else { "" };
        println!("{name}: {} elements{note}", doc.poset.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unsatisfied(msg)) => {
            eprintln!("posetcon: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("posetcon: {msg}");
            ExitCode::from(2)
        }
    }
}
