// scratch perf probe - deleted before finalizing
use rsl_core::catalog::named_graph;
use rsl_core::exec::{Budget, ExecConfig, Parallelism};
use rsl_core::minsearch::{minimal_density_critical, SearchLimits};
use rsl_core::ramsey::{ramsey_exact, RamseyOptions};
use rsl_core::Rational;
use std::time::Instant;

#[test]
#[ignore]
fn probe_ramsey() {
    let exec = ExecConfig::default();
    let opts = RamseyOptions::default();
    for (a, b) in [
        ("K3", "K3"),
        ("P4", "K3"),
        ("K3", "M2"),
        ("K3", "M3"),
        ("K3", "M4"),
        ("K3", "K4"),
        ("P5", "K3"),
        ("S4", "K3"),
        ("K4", "M2"),
        ("K4", "M3"),
    ] {
        let t = Instant::now();
        let r = ramsey_exact(
            &named_graph(a).unwrap(),
            &named_graph(b).unwrap(),
            &opts,
            &exec,
        )
        .unwrap();
        println!(
            "r({a},{b}) = {:?} nodes={} in {:?}",
            r.value,
            r.stats.nodes,
            t.elapsed()
        );
    }
}

#[test]
#[ignore]
fn probe_greedy() {
    for g in 3..=6usize {
        for (order, cap) in [(12, 8), (20, 8), (28, 8), (40, 8), (56, 8), (80, 8), (130, 8), (200, 8)] {
            for seed in 0..3u64 {
                let t = Instant::now();
                let (graph, _) = rsl_core::construct::greedy_high_girth(order, g, cap, seed).unwrap();
                let avg = graph.average_degree().unwrap();
                let girth = graph.girth();
                let ok = avg.at_least_integer(4);
                if ok || order >= 80 {
                    println!(
                        "g={g} order={order} cap={cap} seed={seed}: girth={girth:?} avg={avg} ok={ok} ({:?})",
                        t.elapsed()
                    );
                }
            }
        }
    }
}

#[test]
#[ignore]
fn probe_deletion_pipeline_host() {
    for order in [14usize, 16, 18, 20] {
        for num in [8u64, 10, 12] {
            for seed in 0..6u64 {
                let p = Rational::new(num, order as u64);
                let (graph, log) =
                    rsl_core::construct::deletion_high_girth(order, 4, p, seed).unwrap();
                let avg = graph.average_degree().unwrap();
                if avg.at_least_integer(4) {
                    println!(
                        "order={order} p={num}/{order} seed={seed}: e={} avg={avg} girth={:?} dels={}",
                        graph.edge_count(),
                        graph.girth(),
                        log.steps.len()
                    );
                }
            }
        }
    }
}

#[test]
#[ignore]
fn probe_minsearch_host() {
    // try candidate pipeline hosts for tractability
    for (order, num, seed) in [(14usize, 10u64, 0u64), (14, 10, 1), (16, 10, 5), (16, 8, 2)] {
        let p = Rational::new(num, order as u64);
        let (graph, _) = rsl_core::construct::deletion_high_girth(order, 4, p, seed).unwrap();
        let avg = graph.average_degree().unwrap();
        if !avg.at_least_integer(4) {
            println!("order={order} p={num}/{order} seed={seed}: avg={avg} SKIP");
            continue;
        }
        let t = Instant::now();
        let limits = SearchLimits {
            max_order: graph.order(),
            max_nodes: Some(3_000_000),
        };
        let exec = ExecConfig {
            parallelism: Parallelism::Rayon,
            budget: Budget::unlimited(),
        };
        let report = minimal_density_critical(&graph, &limits, &exec).unwrap();
        println!(
            "order={order} p={num}/{order} seed={seed}: e={} avg={avg} candidates={} complete={} nodes={} in {:?}",
            graph.edge_count(),
            report.candidates.len(),
            report.complete,
            report.stats.nodes,
            t.elapsed()
        );
    }
}
