//! `forestnet`: command-line front end.
//!
//! Every subcommand ends with one line `VERDICT <subcommand> <yes|no> <details>`
//! on stdout. Exit codes: 0 yes, 1 no, 2 usage or input error, 3 search
//! budget or size limit exceeded.

// A closed stdout (`forestnet ... | head`) ends the output silently instead of panicking.
macro_rules! print {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! println {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use forestnet::classify::classify_all_with;
use forestnet::clusters::{
    arboreal_from_clusters, check_p123, cluster_system, is_uniquely_determined, show, ClusterError, P1Violation, ClusterSystem,
};
use forestnet::io::{self, IoError};
use forestnet::oracles::{self, Bias, GenError, GenParams, OracleError};
use forestnet::universal::{is_universal_forest_based_with, UniversalError};
use forestnet::{
    decide_forest_based_with, decide_proper_forest_based_with, decide_proper_two_rooted_with, extract_base_forest,
    gamma_graph, is_based_on_with, verify_certificate, Budget, ForestCertificate, ForestError, Network,
    TwoRootedVerdict,
};

#[derive(Parser)]
#[command(name = "forestnet", version, about = "Forest-based phylogenetic networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a network file and check the network axioms.
    Validate { file: PathBuf },
    /// Report membership in every network class.
    Classify { file: PathBuf },
    /// Decide whether the network has a base forest.
    ForestBased {
        file: PathBuf,
        /// Require one component per root.
        #[arg(long)]
        proper: bool,
        /// Write the retained and contact arcs here.
        #[arg(long, value_name = "OUT")]
        certificate: Option<PathBuf>,
        /// Cross-check against the brute-force decider.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether a given forest (one Newick tree per line) is a base forest.
    BasedOn {
        file: PathBuf,
        #[arg(long, value_name = "FFILE")]
        forest: PathBuf,
    },
    /// Analyse a cluster system, read from a cluster file or a network file.
    Clusters {
        file: PathBuf,
        #[arg(long)]
        check_p123: bool,
        /// Write an arboreal network realising the system.
        #[arg(long, value_name = "OUT")]
        reconstruct: Option<PathBuf>,
        /// Decide whether all realising arboreal networks are equivalent.
        #[arg(long)]
        unique: bool,
    },
    /// Print the root-hybrid graph.
    Gamma {
        file: PathBuf,
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Test whether every forest on the leaf set is a base forest.
    Universal { file: PathBuf },
    /// Draw a seeded random network.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        leaves: usize,
        #[arg(long)]
        roots: usize,
        #[arg(long, conflicts_with = "arboreal")]
        tree_child: bool,
        #[arg(long)]
        arboreal: bool,
        #[arg(short, value_name = "OUT")]
        o: PathBuf,
    },
    /// Write the network as DOT.
    ExportDot {
        file: PathBuf,
        /// Overlay a base forest when one exists.
        #[arg(long)]
        forest: bool,
        #[arg(short, value_name = "OUT")]
        o: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Exhausted(String),
}

struct Verdict {
    command: &'static str,
    yes: bool,
    details: String,
}

impl Verdict {
    fn new(command: &'static str, yes: bool, details: impl Into<String>) -> Self {
        Self { command, yes, details: details.into() }
    }
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        usage(e)
    }
}

impl From<ForestError> for Failure {
    fn from(e: ForestError) -> Self {
        match e {
            ForestError::ResourceExhausted(_) | ForestError::TooLarge(_) => Failure::Exhausted(e.to_string()),
            other => usage(other),
        }
    }
}

impl From<ClusterError> for Failure {
    fn from(e: ClusterError) -> Self {
        match e {
            ClusterError::Forest(f) => f.into(),
            other => usage(other),
        }
    }
}

impl From<UniversalError> for Failure {
    fn from(e: UniversalError) -> Self {
        match e {
            UniversalError::Forest(f) => f.into(),
            UniversalError::TooLarge(_) => Failure::Exhausted(e.to_string()),
            other => usage(other),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge(_) => Failure::Exhausted(e.to_string()),
            other => usage(other),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        print!("{text}");
        return Ok(());
    }
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Network, Failure> {
    Ok(io::parse_network(&read(path)?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn validate(file: &Path) -> Result<Verdict, Failure> {
    let text = read(file)?;
    // syntax errors are usage errors; axiom violations are a "no"
    let graph = io::parse_digraph(&text)?;
    Ok(match Network::from_digraph(graph) {
        Ok(n) => Verdict::new(
            "validate",
            true,
            format!("roots={} leaves={} hybrids={} vertices={}", n.root_count(), n.leaf_count(), n.hybrids().len(), n.vertex_count()),
        ),
        Err(e) => Verdict::new("validate", false, format!("error=\"{e}\"")),
    })
}

fn classify(file: &Path, budget: &mut Budget) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let r = classify_all_with(&n, budget).map_err(|e| match e {
        forestnet::classify::ClassifyError::Forest(f) => f.into(),
        other => usage(other),
    })?;
    let opt = |o: Option<bool>| o.map_or("n/a", yes_no);
    let witness = |w: Option<usize>| w.map_or(String::new(), |v| format!(" (witness {})", n.name(v)));
    println!("roots {}", r.roots);
    println!("leaves {}", r.leaves);
    println!("binary {}", yes_no(r.binary));
    println!("phylogenetic {}", yes_no(r.phylogenetic));
    println!("tree-child {}{}", yes_no(r.tree_child), witness(r.tree_child_witness));
    println!("tree-sibling {}{}", yes_no(r.tree_sibling), witness(r.tree_sibling_witness));
    println!("reticulation-visible {}{}", yes_no(r.reticulation_visible), witness(r.reticulation_visible_witness));
    println!("arboreal {}", yes_no(r.arboreal));
    println!("forest-based {}", yes_no(r.forest_based));
    println!("proper-forest-based {}", opt(r.proper_forest_based));
    println!("tree-based {}", opt(r.tree_based));
    Ok(Verdict::new(
        "classify",
        true,
        format!(
            "tree-child={} tree-sibling={} reticulation-visible={} arboreal={} forest-based={} proper={} tree-based={}",
            yes_no(r.tree_child),
            yes_no(r.tree_sibling),
            yes_no(r.reticulation_visible),
            yes_no(r.arboreal),
            yes_no(r.forest_based),
            opt(r.proper_forest_based),
            opt(r.tree_based)
        ),
    ))
}

fn forest_based(
    file: &Path,
    proper: bool,
    certificate: Option<&Path>,
    oracle: bool,
    budget: &mut Budget,
) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let cert: Option<ForestCertificate> = if proper {
        decide_proper_forest_based_with(&n, budget)?.map(|c| c.to_forest_certificate(&n))
    } else {
        decide_forest_based_with(&n, budget)?
    };
    if let Some(c) = &cert {
        verify_certificate(&n, c).map_err(|d| usage(format!("internal error: certificate rejected: {d}")))?;
        let forest = extract_base_forest(&n, c)?;
        print!("{}", io::print_forest(&forest));
        if let Some(out) = certificate {
            write(out, &io::print_certificate(&n, c))?;
        }
    }
    let mut details = match &cert {
        Some(c) => format!("components={}", c.component_count()),
        None => "components=0".to_owned(),
    };
    let mut agree = true;
    if oracle {
        let expected =
            if proper { oracles::brute_force_proper(&n)? } else { oracles::brute_force_forest_based(&n)? };
        agree = expected == cert.is_some();
        details.push_str(if agree { " oracle=agree" } else { " oracle=disagree" });
    }
    if proper {
        details.push_str(" proper=required");
    }
    Ok(Verdict::new("forest-based", cert.is_some() && agree, details))
}

fn based_on(file: &Path, forest: &Path, budget: &mut Budget) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let f = io::parse_forest(&read(forest)?)?;
    Ok(match is_based_on_with(&n, &f, budget)? {
        Some(c) => {
            print!("{}", io::print_certificate(&n, &c));
            Verdict::new("based-on", true, format!("trees={}", f.len()))
        }
        None => Verdict::new("based-on", false, format!("trees={}", f.len())),
    })
}

fn load_clusters(path: &Path) -> Result<ClusterSystem, Failure> {
    let text = read(path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with("arc ") || first.starts_with("leaf ") {
        Ok(cluster_system(&io::parse_network(&text)?))
    } else {
        Ok(io::parse_clusters(&text)?)
    }
}

fn clusters(file: &Path, p123: bool, reconstruct: Option<&Path>, unique: bool) -> Result<Verdict, Failure> {
    let c = load_clusters(file)?;
    let mut yes = true;
    let mut details = vec![format!("clusters={}", c.len())];
    if !p123 && reconstruct.is_none() && !unique {
        print!("{}", io::print_clusters(&c));
    }
    if p123 {
        let report = check_p123(&c);
        match &report.p1 {
            Some(P1Violation::MissingSingleton(l)) => println!("P1 violated: singleton {{{l}}} missing"),
            Some(P1Violation::Overlap { maximal, first, second }) => {
                println!("P1 violated: {} and {} overlap inside {}", show(first), show(second), show(maximal))
            }
            None => {}
        }
        if let Some(parts) = &report.p2 {
            println!("P2 violated: {} components", parts.len());
        }
        if let Some((a, b)) = &report.p3 {
            println!("P3 violated: {} and {}", show(a), show(b));
        }
        let violated = report.violated();
        yes &= violated.is_empty();
        details.push(format!("p123={}", if violated.is_empty() { "hold".to_owned() } else { violated.join(",") }));
    }
    if let Some(out) = reconstruct {
        match arboreal_from_clusters(&c) {
            Ok(n) => {
                write(out, &io::print_network(&n))?;
                details.push(format!("reconstructed=yes roots={}", n.root_count()));
            }
            Err(e @ (ClusterError::PropertiesViolated(_) | ClusterError::NotRealizable(_))) => {
                println!("{e}");
                yes = false;
                details.push("reconstructed=no".to_owned());
            }
            Err(e) => return Err(e.into()),
        }
    }
    if unique {
        match is_uniquely_determined(&c) {
            Ok(u) => {
                yes &= u;
                details.push(format!("unique={}", yes_no(u)));
            }
            Err(ClusterError::PropertiesViolated(e)) => {
                println!("properties violated: {e}");
                yes = false;
                details.push("unique=n/a".to_owned());
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Verdict::new("clusters", yes, details.join(" ")))
}

fn gamma(file: &Path, dot: Option<&Path>, budget: &mut Budget) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let g = gamma_graph(&n);
    for e in g.edges() {
        println!("edge {} {} via {}", n.name(e.u), n.name(e.v), n.name(e.hybrid));
    }
    for (w, options) in g.omni_options() {
        let names: Vec<String> =
            options.iter().map(|o| format!("{}-{}", n.name(o.hybrid), n.name(o.other_gamma))).collect();
        println!("omnian {} options {}", n.name(*w), names.join(" "));
    }
    if let Some(out) = dot {
        write(out, &g.to_dot(&n))?;
    }
    let mut details = format!(
        "vertices={} edges={} loop={} extensions={}",
        g.vertices().len(),
        g.edges().len(),
        yes_no(g.has_loop()),
        g.extension_count()
    );
    let mut yes = !g.has_loop();
    if n.root_count() == 2 {
        match decide_proper_two_rooted_with(&n, budget)? {
            TwoRootedVerdict::Bipartite(_) => details.push_str(" bipartite=yes"),
            TwoRootedVerdict::OddCycle { cycle, checked, .. } => {
                let names: Vec<&str> = cycle.iter().map(|&v| n.name(v)).collect();
                println!("odd cycle {}", names.join(" "));
                details.push_str(&format!(" bipartite=no checked={checked}"));
                yes = false;
            }
        }
    }
    Ok(Verdict::new("gamma", yes, details))
}

fn universal(file: &Path, budget: &mut Budget) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let report = is_universal_forest_based_with(&n, budget)?;
    for (f, _) in &report.embedded {
        println!("embedded {}", f.to_newick().trim_end().replace('\n', " "));
    }
    if let Some(f) = &report.failing {
        println!("failing {}", f.to_newick().trim_end().replace('\n', " "));
    }
    Ok(Verdict::new("universal", report.is_universal(), format!("embedded={}", report.embedded.len())))
}

fn gen(seed: u64, leaves: usize, roots: usize, tree_child: bool, arboreal: bool, out: &Path) -> Result<Verdict, Failure> {
    let bias = match (tree_child, arboreal) {
        (true, _) => Bias::TreeChild,
        (_, true) => Bias::Arboreal,
        _ => Bias::Unconstrained,
    };
    let n = oracles::random_network(&GenParams::new(seed, leaves, roots).bias(bias)).map_err(|e| match e {
        GenError::InfeasibleParams(_) => usage(e),
        GenError::RejectionBudgetExhausted => Failure::Exhausted(e.to_string()),
    })?;
    write(out, &io::print_network(&n))?;
    Ok(Verdict::new(
        "gen",
        true,
        format!("vertices={} roots={} hybrids={}", n.vertex_count(), n.root_count(), n.hybrids().len()),
    ))
}

fn export_dot(file: &Path, forest: bool, out: &Path, budget: &mut Budget) -> Result<Verdict, Failure> {
    let n = load(file)?;
    let cert = if forest { decide_forest_based_with(&n, budget)? } else { None };
    write(out, &io::export_dot(&n, cert.as_ref()))?;
    Ok(Verdict::new("export-dot", true, format!("vertices={} overlay={}", n.vertex_count(), yes_no(cert.is_some()))))
}

fn run(cli: Cli) -> Result<Verdict, Failure> {
    let mut budget = Budget::from_env();
    let budget = &mut budget;
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Classify { file } => classify(&file, budget),
        Command::ForestBased { file, proper, certificate, oracle } => {
            forest_based(&file, proper, certificate.as_deref(), oracle, budget)
        }
        Command::BasedOn { file, forest } => based_on(&file, &forest, budget),
        Command::Clusters { file, check_p123, reconstruct, unique } => {
            clusters(&file, check_p123, reconstruct.as_deref(), unique)
        }
        Command::Gamma { file, dot } => gamma(&file, dot.as_deref(), budget),
        Command::Universal { file } => universal(&file, budget),
        Command::Gen { seed, leaves, roots, tree_child, arboreal, o } => gen(seed, leaves, roots, tree_child, arboreal, &o),
        Command::ExportDot { file, forest, o } => export_dot(&file, forest, &o, budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(v) => {
            println!("VERDICT {} {} {}", v.command, yes_no(v.yes), v.details);
            ExitCode::from(if v.yes { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
