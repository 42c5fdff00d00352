//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected answers come from the brute-force oracles, from exhaustive
//! enumeration, or from the construction of the instance itself.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use forestnet::classify::is_tree_based_phylo;
use forestnet::clusters::{
    arboreal_from_clusters, bad_arcs, check_p123, cluster_system, collapse_bad_arcs, is_uniquely_determined,
    no_repeated_meet, reconstruction_variants, Cluster, ClusterSystem,
};
use forestnet::io::{parse_network, print_network};
use forestnet::oracles::{
    brute_force_forest_based, brute_force_proper, enumerate_binary_networks, random_network, Bias, EnumerationLimits,
    GenParams,
};
use forestnet::universal::{forbidden_configuration, search_universal};
use forestnet::{
    arboreal_forest_based, decide_forest_based, decide_proper_forest_based, decide_proper_two_rooted,
    verify_certificate, Network,
};

/// Wall-clock cap for the forest-based oracle comparison.
const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(300);
const SMALL: usize = 12;
const ARBOREAL_MAX_VERTICES: usize = 16;
const UNIVERSAL_SLICE_VERTICES: usize = 12;
const GOLDEN_FILES: usize = 50;

type Outcome = Result<String, String>;

/// `count` networks from consecutive seeds; draws that fail are skipped.
fn sample(count: usize, first_seed: u64, params: impl Fn(u64) -> GenParams) -> Vec<Network> {
    let mut out = Vec::with_capacity(count);
    let mut seed = first_seed;
    while out.len() < count {
        if let Ok(n) = random_network(&params(seed)) {
            out.push(n);
        }
        seed += 1;
        assert!(seed - first_seed < 100 * count as u64 + 1000, "generator keeps failing");
    }
    out
}

fn small_network(seed: u64) -> GenParams {
    let roots = 1 + (seed % 3) as usize;
    let bias = [Bias::Unconstrained, Bias::ForestSeeded, Bias::TreeChild, Bias::Unconstrained][(seed / 3 % 4) as usize];
    let bias = if bias == Bias::TreeChild && roots == 3 { Bias::Unconstrained } else { bias };
    let p = GenParams::new(seed, 2, roots).leaves(roots.max(2), 5).hybrids(roots - 1, roots + 3).bias(bias).max_vertices(SMALL);
    if bias == Bias::Unconstrained && seed.is_multiple_of(2) { p.contractions(1) } else { p }
}

fn names(n: &Network, vs: &[usize]) -> String {
    vs.iter().map(|&v| n.name(v)).collect::<Vec<_>>().join(" ")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let nets = sample(10_000, 1, small_network);
    let mut fb = 0;
    for n in &nets {
        let exact = decide_forest_based(n).map_err(|e| e.to_string())?;
        if let Some(c) = &exact {
            verify_certificate(n, c).map_err(|d| format!("invalid certificate: {d}"))?;
            fb += 1;
        }
        if exact.is_some() != brute_force_forest_based(n).map_err(|e| e.to_string())? {
            return Err(format!("disagreement on\n{}", print_network(n)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ORACLE_TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    let non_binary = nets.iter().filter(|n| !n.is_binary()).count();
    Ok(format!("10000 networks ({fb} forest-based, {non_binary} non-binary), 0 disagreements, {elapsed:.1?}"))
}

fn criterion_2() -> Outcome {
    let nets = sample(1000, 20_000, |s| {
        let roots = 2 + (s % 2) as usize;
        let bias = if s % 3 == 0 { Bias::ForestSeeded } else { Bias::Unconstrained };
        GenParams::new(s, 2, roots).leaves(roots, 6).hybrids(roots - 1, roots + 2).bias(bias).max_vertices(SMALL)
    });
    let mut proper = 0;
    for n in &nets {
        let exact = decide_proper_forest_based(n).map_err(|e| e.to_string())?;
        if let Some(c) = &exact {
            c.check(n).map_err(|d| format!("invalid colouring: {d}"))?;
            proper += 1;
        }
        if exact.is_some() != brute_force_proper(n).map_err(|e| e.to_string())? {
            return Err(format!("disagreement on\n{}", print_network(n)));
        }
    }
    Ok(format!("1000 networks with 2 or 3 roots ({proper} proper), 0 disagreements"))
}

fn criterion_3() -> Outcome {
    let nets = sample(1000, 40_000, |s| {
        let roots = 1 + (s % 3) as usize;
        GenParams::new(s, 2 * roots + 1, roots).leaves(2 * roots, 2 * roots + 4).hybrids(roots - 1, roots + 1).bias(Bias::TreeChild)
    });
    for n in &nets {
        if !n.is_binary() || !forestnet::classify::is_tree_child(n) {
            return Err(format!("generator produced a non-binary or non-tree-child network\n{}", print_network(n)));
        }
        if decide_forest_based(n).map_err(|e| e.to_string())?.is_none() {
            return Err(format!("tree-child network not forest-based\n{}", print_network(n)));
        }
    }
    Ok("1000 binary tree-child networks, all forest-based".into())
}

fn criterion_4() -> Outcome {
    let nets = sample(2000, 60_000, |s| GenParams::new(s, 4, 1).leaves(2, 6).hybrids(0, 4).max_vertices(20));
    let mut fb = 0;
    for n in nets.iter().filter(|n| n.is_binary()) {
        if decide_forest_based(n).map_err(|e| e.to_string())?.is_some() {
            fb += 1;
            if !is_tree_based_phylo(n).map_err(|e| e.to_string())? {
                return Err(format!("forest-based but not tree-based\n{}", print_network(n)));
            }
        }
    }
    if fb == 0 {
        return Err("no forest-based single-root sample".into());
    }
    Ok(format!("{fb} forest-based binary single-root networks, all tree-based"))
}

fn criterion_5(variants: &[(ClusterSystem, Vec<Network>)]) -> Outcome {
    let nets = sample(2000, 80_000, |s| {
        let roots = 1 + (s % 4) as usize;
        GenParams::new(s, 2, roots).leaves(roots.max(2), 7).bias(Bias::Arboreal).max_vertices(ARBOREAL_MAX_VERTICES)
    });
    let (mut fb, mut proper) = (0, 0);
    for n in &nets {
        if !n.is_arboreal() {
            return Err(format!("generator produced a non-arboreal network\n{}", print_network(n)));
        }
        let fast = arboreal_forest_based(n).map_err(|e| e.to_string())?;
        let exact = decide_forest_based(n).map_err(|e| e.to_string())?;
        if fast.is_forest_based() != exact.is_some() {
            return Err(format!("arboreal test disagrees\n{}", print_network(n)));
        }
        if let Some(c) = &fast.certificate {
            verify_certificate(n, c).map_err(|d| format!("invalid arboreal certificate: {d}"))?;
            fb += 1;
            if n.root_count() >= 2 {
                if decide_proper_forest_based(n).map_err(|e| e.to_string())?.is_none() {
                    return Err(format!("arboreal forest-based network without a proper base forest\n{}", print_network(n)));
                }
                proper += 1;
            }
        }
    }
    // the generator only builds forest-based arboreal networks; enumeration supplies the rest
    let (mut listed, mut listed_fb) = (0, 0);
    let mut failure = None;
    for labels in [&["a", "b", "c"][..], &["a", "b", "c", "d"]] {
        enumerate_binary_networks(labels, EnumerationLimits::vertices(11), |n| {
            if !n.is_arboreal() {
                return true;
            }
            listed += 1;
            let fast = arboreal_forest_based(&n).map(|v| v.is_forest_based());
            let exact = brute_force_forest_based(&n);
            match (fast, exact) {
                (Ok(a), Ok(b)) if a == b => {
                    listed_fb += usize::from(a);
                    true
                }
                _ => {
                    failure = Some(print_network(&n));
                    false
                }
            }
        });
    }
    if let Some(n) = failure {
        return Err(format!("arboreal test disagrees with brute force\n{n}"));
    }
    // reconstruction variants include hybrids with two hybrid parents, which block every base forest
    let (mut rebuilt, mut rebuilt_fb) = (0, 0);
    for n in variants.iter().flat_map(|(_, v)| v) {
        let fast = arboreal_forest_based(n).map_err(|e| e.to_string())?.is_forest_based();
        if fast != decide_forest_based(n).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("arboreal test disagrees on a reconstruction\n{}", print_network(n)));
        }
        rebuilt += 1;
        rebuilt_fb += usize::from(fast);
    }
    if rebuilt_fb == rebuilt {
        return Err("no arboreal sample that is not forest-based".into());
    }
    Ok(format!(
        "2000 generated arboreal networks ({fb} forest-based, {proper} multi-rooted and proper); \
         {listed} enumerated ({listed_fb} forest-based) agree with brute force; \
         {rebuilt} reconstructions ({rebuilt_fb} forest-based) agree with the exact decider"
    ))
}

fn criterion_6() -> Outcome {
    let nets = sample(1000, 100_000, |s| {
        let bias = if s % 3 == 0 { Bias::ForestSeeded } else { Bias::Unconstrained };
        let p = GenParams::new(s, 3, 2).leaves(2, 6).hybrids(1, 4).bias(bias).max_vertices(16);
        if bias == Bias::Unconstrained && s % 2 == 0 { p.contractions(1) } else { p }
    });
    let mut bipartite = 0;
    for n in &nets {
        let verdict = decide_proper_two_rooted(n).map_err(|e| e.to_string())?;
        let exact = decide_proper_forest_based(n).map_err(|e| e.to_string())?.is_some();
        if verdict.is_proper() != exact {
            return Err(format!("two-rooted test disagrees\n{}", print_network(n)));
        }
        bipartite += usize::from(exact);
    }
    Ok(format!("1000 two-rooted networks ({bipartite} with a bipartite extension), 0 disagreements"))
}

/// Cluster systems of generated arboreal networks.
fn arboreal_systems(count: usize, first_seed: u64) -> Vec<ClusterSystem> {
    sample(count, first_seed, |s| {
        let roots = 2 + (s % 3) as usize;
        GenParams::new(s, 2, roots).leaves(roots, 8).bias(Bias::Arboreal)
    })
    .iter()
    .map(cluster_system)
    .collect()
}

fn singleton(l: &str) -> Cluster {
    Cluster::from([l.to_owned()])
}

/// A corruption of `c` targeting one property, with the property expected
/// to be the only one violated.
fn corrupt(c: &ClusterSystem, kind: usize) -> Option<(ClusterSystem, &'static str)> {
    let maximal: Vec<Cluster> = c.maximal().into_iter().cloned().collect();
    let all: Vec<Cluster> = c.clusters().iter().cloned().collect();
    let rebuild = |clusters: Vec<Cluster>| ClusterSystem::new(c.ground().clone(), clusters).ok();
    match kind {
        // drop the singleton of a leaf lying in one maximal cluster only
        0 => {
            let x = c.ground().iter().find(|x| maximal.iter().filter(|m| m.contains(*x)).count() == 1)?;
            let s = singleton(x);
            Some((rebuild(all.into_iter().filter(|k| *k != s).collect())?, "P1"))
        }
        // add {x, y} crossing a cluster D below a maximal cluster
        1 => maximal.iter().find_map(|m| {
            let d = all.iter().find(|d| d.len() >= 2 && *d != m && d.is_subset(m))?;
            let x = d.iter().next()?;
            let y = m.difference(d).next()?;
            let pair = Cluster::from([x.clone(), y.clone()]);
            if c.contains(&pair) {
                return None;
            }
            let mut clusters = all.clone();
            clusters.push(pair);
            Some((rebuild(clusters)?, "P1"))
        }),
        // disjoint union with a relabelled copy
        2 => {
            let copy = |k: &Cluster| k.iter().map(|l| format!("z{l}")).collect::<Cluster>();
            let clusters: Vec<Cluster> = all.iter().cloned().chain(all.iter().map(copy)).collect();
            Some((ClusterSystem::from_clusters(clusters).ok()?, "P2"))
        }
        // drop a non-singleton intersection of two maximal clusters
        _ => {
            let meet = maximal.iter().enumerate().find_map(|(i, a)| {
                maximal[i + 1..].iter().map(|b| a.intersection(b).cloned().collect::<Cluster>()).find(|k| k.len() >= 2)
            })?;
            if maximal.contains(&meet) {
                return None;
            }
            Some((rebuild(all.into_iter().filter(|k| *k != meet).collect())?, "P3"))
        }
    }
}

fn criterion_7() -> Outcome {
    let systems = arboreal_systems(500, 120_000);
    for c in &systems {
        let report = check_p123(c);
        if !report.all_hold() {
            return Err(format!("harvested system violates {:?}", report.violated()));
        }
        let n = arboreal_from_clusters(c).map_err(|e| e.to_string())?;
        if !n.is_arboreal() || cluster_system(&n) != *c {
            return Err(format!("reconstruction does not reproduce the system\n{}", print_network(&n)));
        }
    }
    let mut corrupted = 0;
    let mut per_kind = [0usize; 4];
    'outer: for round in 0.. {
        for (i, c) in systems.iter().enumerate() {
            let kind = (i + round) % 4;
            if let Some((bad, expected)) = corrupt(c, kind) {
                let violated = check_p123(&bad).violated();
                if violated != [expected] {
                    return Err(format!("corruption {kind} should violate only {expected}, found {violated:?}"));
                }
                corrupted += 1;
                per_kind[kind] += 1;
                if corrupted == 100 {
                    break 'outer;
                }
            }
        }
        if round > 8 {
            return Err(format!("only {corrupted} corruptions could be built"));
        }
    }
    if per_kind.contains(&0) {
        return Err(format!("some corruption kind never applied: {per_kind:?}"));
    }
    Ok(format!("500 systems reconstructed exactly; 100 corruptions identified (per kind {per_kind:?})"))
}

/// Valid systems with their reconstruction variants.
fn systems_with_variants(count: usize) -> Result<Vec<(ClusterSystem, Vec<Network>)>, String> {
    arboreal_systems(count, 140_000)
        .into_iter()
        .map(|c| reconstruction_variants(&c, 200).map(|v| (c, v)).map_err(|e| e.to_string()))
        .collect()
}

fn criterion_8(data: &[(ClusterSystem, Vec<Network>)]) -> Outcome {
    let (mut unique, mut several, mut stronger_wrong) = (0, 0, 0);
    for (c, variants) in data {
        let collapsed: Vec<_> = variants.iter().map(collapse_bad_arcs).collect();
        for d in &collapsed[1..] {
            if !collapsed[0].is_equivalent(d).map_err(|e| e.to_string())? {
                return Err("variants differ after collapsing bad arcs".into());
            }
        }
        // variants are pairwise inequivalent, so one variant means all agree
        let equivalent = variants.len() == 1;
        if equivalent != is_uniquely_determined(c).map_err(|e| e.to_string())? {
            return Err(format!("{} variants but uniqueness test says otherwise", variants.len()));
        }
        if equivalent != bad_arcs(&variants[0]).is_empty() {
            return Err("uniqueness disagrees with the bad arcs of a realisation".into());
        }
        stronger_wrong += usize::from(equivalent != no_repeated_meet(c).map_err(|e| e.to_string())?);
        if equivalent { unique += 1 } else { several += 1 }
    }
    if several == 0 {
        return Err("no system with inequivalent variants".into());
    }
    Ok(format!(
        "200 systems: {unique} uniquely determined, {several} with inequivalent variants; all equal after collapse; \
         the repeated-meet test misjudges {stronger_wrong}"
    ))
}

fn criterion_9(data: &[(ClusterSystem, Vec<Network>)]) -> Outcome {
    let (mut compared, mut mixed) = (0, 0);
    let mut example = None;
    for (_, variants) in data {
        let status: Vec<bool> = variants
            .iter()
            .map(|n| decide_forest_based(n).map(|c| c.is_some()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        compared += variants.len();
        if status.iter().any(|&s| s != status[0]) {
            mixed += 1;
            if example.is_none() {
                let yes = status.iter().position(|&s| s).expect("mixed status");
                let no = status.iter().position(|&s| !s).expect("mixed status");
                for k in [yes, no] {
                    if brute_force_forest_based(&variants[k]).map_err(|e| e.to_string())? != status[k] {
                        return Err("exact decider disagrees with brute force".into());
                    }
                }
                example = Some(format!("forest-based:\n{}not forest-based:\n{}", print_network(&variants[yes]), print_network(&variants[no])));
            }
        }
    }
    match example {
        None => Ok(format!("{compared} variants over {} systems, status constant per system", data.len())),
        Some(e) => Err(format!(
            "{mixed} of {} systems have equal-cluster arboreal variants with different status \
             (confirmed by brute force); first pair\n{e}",
            data.len()
        )),
    }
}

fn criterion_10() -> Outcome {
    let three = search_universal(&["a", "b", "c"], 10, 2, Some(1)).map_err(|e| e.to_string())?;
    let Some(u) = three.universal.first() else {
        return Err("no universal network on three leaves".into());
    };
    if brute_force_base_forest_count(u)? != 4 {
        return Err("brute force does not find four base forests".into());
    }
    let four = search_universal(&["a", "b", "c", "d"], UNIVERSAL_SLICE_VERTICES, 1, None).map_err(|e| e.to_string())?;
    if !four.universal.is_empty() {
        return Err(format!("universal network on four leaves\n{}", print_network(&four.universal[0])));
    }
    if four.configuration_counterexamples != 0 {
        return Err("a network with the forbidden configuration is universal".into());
    }
    let w = forbidden_configuration(u);
    Ok(format!(
        "|X|=3: universal {}-vertex network found ({} candidates, configuration {}); |X|=4, <= {UNIVERSAL_SLICE_VERTICES} vertices: {} networks, none universal, {} with the configuration",
        u.vertex_count(),
        three.checked,
        w.map_or("absent".to_owned(), |(w, x, y)| names(u, &[w, x, y])),
        four.checked,
        four.with_configuration
    ))
}

fn brute_force_base_forest_count(n: &Network) -> Result<usize, String> {
    forestnet::oracles::brute_force_base_forests(n).map(|f| f.len()).map_err(|e| e.to_string())
}

fn criterion_11() -> Outcome {
    let mut nets = sample(3000, 1, small_network);
    nets.extend(sample(1000, 160_000, |s| {
        let roots = 2 + (s % 3) as usize;
        GenParams::new(s, roots, roots).hybrids(roots - 1, roots + 1).max_vertices(SMALL + 4)
    }));
    let (mut fb, mut tight) = (0, 0);
    for n in &nets {
        let Some(c) = decide_forest_based(n).map_err(|e| e.to_string())? else { continue };
        fb += 1;
        if n.leaf_count() < n.root_count() {
            return Err(format!("forest-based with fewer leaves than roots\n{}", print_network(n)));
        }
        if n.leaf_count() == n.root_count() {
            tight += 1;
            if !c.is_proper(n) {
                return Err(format!("|X| = m but the certificate is not proper\n{}", print_network(n)));
            }
        }
    }
    if tight == 0 {
        return Err("no forest-based sample with |X| = m".into());
    }
    Ok(format!("{fb} forest-based samples satisfy |X| >= m; {tight} with |X| = m, all proper"))
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden")
}

fn run_cli(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_forestnet"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("run forestnet");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn criterion_12() -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    files.retain(|p| p.extension().is_some_and(|e| e == "net"));
    files.sort();
    if files.len() != GOLDEN_FILES {
        return Err(format!("expected {GOLDEN_FILES} golden files, found {}", files.len()));
    }
    for f in &files {
        let text = std::fs::read_to_string(f).map_err(|e| e.to_string())?;
        let n = parse_network(&text).map_err(|e| format!("{}: {e}", f.display()))?;
        if print_network(&n) != text {
            return Err(format!("{} does not round-trip", f.display()));
        }
    }

    let dir = std::env::temp_dir().join(format!("forestnet-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let put = |name: &str, text: &str| std::fs::write(dir.join(name), text).map_err(|e| e.to_string());
    put("cherry.net", "arc r a\narc r b\nleaf a x\nleaf b y\n")?;
    // two roots sharing their only hybrid: the root r2 keeps nothing but a contact arc
    put("no.net", "arc r1 a\narc r1 h\narc r2 h\narc r2 b\narc h c\nleaf a a\nleaf b b\nleaf c c\narc r3 h2\narc r3 d\narc r1 h2\narc h2 e\nleaf d d\nleaf e e\n")?;
    put("syntax.net", "arc r\n")?;
    put("root1.net", "arc r a\nleaf a x\n")?;
    put("forest.nwk", "x;\ny;\n")?;
    type Case<'a> = (Vec<String>, Vec<(&'a str, &'a str)>, i32, &'a str);
    let cases: Vec<Case> = vec![
        (vec!["forest-based".into(), path("cherry.net")], vec![], 0, "VERDICT forest-based yes components=2"),
        (vec!["forest-based".into(), path("cherry.net"), "--oracle".into()], vec![], 0, "VERDICT forest-based yes"),
        (vec!["validate".into(), path("cherry.net")], vec![], 0, "VERDICT validate yes"),
        (vec!["validate".into(), path("root1.net")], vec![], 1, "VERDICT validate no"),
        (vec!["validate".into(), path("syntax.net")], vec![], 2, ""),
        (vec!["forest-based".into(), path("missing.net")], vec![], 2, ""),
        (vec!["frobnicate".into()], vec![], 2, ""),
        (vec!["based-on".into(), path("cherry.net"), "--forest".into(), path("forest.nwk")], vec![], 0, "VERDICT based-on yes"),
        (vec!["forest-based".into(), path("cherry.net")], vec![("FORESTNET_NODE_BUDGET", "0")], 3, ""),
        (vec!["gen".into(), "--seed".into(), "5".into(), "--leaves".into(), "4".into(), "--roots".into(), "2".into(), "--tree-child".into(), "-o".into(), path("gen.net")], vec![], 0, "VERDICT gen yes"),
        (vec!["forest-based".into(), path("gen.net"), "--certificate".into(), path("gen.cert")], vec![], 0, "VERDICT forest-based yes"),
        (vec!["classify".into(), path("gen.net")], vec![], 0, "VERDICT classify yes"),
        (vec!["export-dot".into(), path("gen.net"), "--forest".into(), "-o".into(), path("gen.dot")], vec![], 0, "VERDICT export-dot yes"),
    ];
    let mut checked = 0;
    for (args, env, code, prefix) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (got, stdout) = run_cli(&args, env);
        let last = stdout.lines().last().unwrap_or("");
        if got != *code || !last.starts_with(prefix) {
            return Err(format!("`forestnet {}` exited {got} with `{last}`, expected {code} and `{prefix}`", args.join(" ")));
        }
        checked += 1;
    }
    // the second network is decided "no" by both deciders
    let n = parse_network(&std::fs::read_to_string(dir.join("no.net")).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let expected = brute_force_forest_based(&n).map_err(|e| e.to_string())?;
    let (got, stdout) = run_cli(&["forest-based", &path("no.net"), "--oracle"], &[]);
    if got != if expected { 0 } else { 1 } || !stdout.contains("oracle=agree") {
        return Err(format!("oracle run on no.net exited {got}: {stdout}"));
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} golden files round-trip; {} CLI exit-code cases", files.len(), checked + 1))
}

fn main() {
    let variants = systems_with_variants(200);
    let criteria: Vec<(usize, Box<dyn FnOnce() -> Outcome>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(|| variants.as_deref().map_err(Clone::clone).and_then(criterion_5))),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(|| variants.as_deref().map_err(Clone::clone).and_then(criterion_8))),
        (9, Box::new(|| variants.as_deref().map_err(Clone::clone).and_then(criterion_9))),
        (10, Box::new(criterion_10)),
        (11, Box::new(criterion_11)),
        (12, Box::new(criterion_12)),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("criterion {k:>2}: PASS ({t:.1?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL ({t:.1?}) {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
