//! Built-in suites replaying the published tables. The same suites ship as
//! JSON files under `suites/` for the command line.

use std::path::PathBuf;

use packing_core::generators::GraphSpec;

use crate::case::{BenchCase, Expectation, ExpectationSource, GraphSource, Method, SolverParams};

fn spec(text: &str) -> GraphSource {
    GraphSource::spec(text.parse::<GraphSpec>().expect("built-in spec parses"))
}

fn paper_exact(value: u32) -> Expectation {
    Expectation::exact(value, ExpectationSource::PaperTable)
}

/// Paths, cycles, a star and a complete multipartite graph, solved by the
/// GA and cross-checked by the exact oracle.
pub fn table1() -> Vec<BenchCase> {
    [
        ("C15", "cycle:15", 4),
        ("C20", "cycle:20", 3),
        ("P20", "path:20", 3),
        ("S10", "star:10", 2),
        ("K3,5,7", "multipartite:3,5,7", 9),
    ]
    .into_iter()
    .map(|(name, s, value)| {
        BenchCase::new(name, spec(s), &[Method::Ga, Method::Exact], 0..10)
            .expect(paper_exact(value))
    })
    .collect()
}

/// Unitary Cayley graphs of `Z_n`.
pub fn table2() -> Vec<BenchCase> {
    let mut cases: Vec<BenchCase> = [(5u64, 5u32), (16, 9), (21, 15), (27, 19)]
        .into_iter()
        .map(|(n, value)| {
            BenchCase::new(
                format!("Z{n}"),
                spec(&format!("unitary:{n}")),
                &[Method::Ga, Method::Exact],
                0..10,
            )
            .expect(paper_exact(value))
        })
        .collect();
    cases.push(
        BenchCase::new(
            "Z45",
            spec("unitary:45"),
            &[Method::Ga, Method::Exact],
            0..20,
        )
        .expect(Expectation::at_most(31, ExpectationSource::PaperTable)),
    );
    cases
}

/// Cayley graphs of `Z_n` with symmetric connection sets.
pub fn table3() -> Vec<BenchCase> {
    [
        ("Z8{1,3,5,7}", "circulant:8:1,3,5,7", 5),
        ("Z12{1,3,9,11}", "circulant:12:1,3,9,11", 7),
        ("Z8{1,2,3,5,6,7}", "circulant:8:1,2,3,5,6,7", 7),
        ("Z9{1,2,3,6,7,8}", "circulant:9:1,2,3,6,7,8", 8),
        ("Z12{1,2,3,9,10,11}", "circulant:12:1,2,3,9,10,11", 10),
    ]
    .into_iter()
    .map(|(name, s, value)| {
        BenchCase::new(
            name,
            spec(s),
            &[Method::Greedy, Method::Ls, Method::Ga, Method::Exact],
            0..10,
        )
        .expect(paper_exact(value))
    })
    .collect()
}

/// GA settings for the larger graphs: the default population stalls on
/// them long before the iteration limit.
pub fn large_ga_params(population: usize, max_iterations: u64) -> SolverParams {
    SolverParams {
        ga_population: Some(population),
        ga_offspring: Some(population / 2),
        ga_max_iterations: Some(max_iterations),
        stop_when_met: true,
        time_limit_s: Some(600.0),
        ..SolverParams::default()
    }
}

/// Greedy with one order per seed (six rows, as in the published table)
/// and the GA with a bound one above the published GA value.
pub fn table4() -> Vec<BenchCase> {
    let one_order = SolverParams {
        greedy_orders: Some(1),
        ..SolverParams::default()
    };
    vec![
        BenchCase::new(
            "G(12,2) greedy",
            spec("petersen:12,2"),
            &[Method::Greedy],
            0..6,
        )
        .with_params(one_order),
        BenchCase::new("G(12,2)", spec("petersen:12,2"), &[Method::Ga], 0..20)
            .expect(Expectation::at_most(11, ExpectationSource::PaperTable))
            .with_params(large_ga_params(2000, 3000)),
        BenchCase::new("TI greedy", spec("ti"), &[Method::Greedy], 0..6).with_params(one_order),
        BenchCase::new("TI", spec("ti"), &[Method::Ga], 0..20)
            .expect(Expectation::at_most(17, ExpectationSource::PaperTable))
            .with_params(large_ga_params(5000, 1000)),
    ]
}

/// Templates for graphs that have to be supplied as files.
pub fn table4_user_graphs() -> Vec<BenchCase> {
    ["bn16", "c48", "c70"]
        .into_iter()
        .map(|name| {
            let graph = GraphSource::File {
                file: PathBuf::from(format!("graphs/{name}.txt")),
                format: None,
            };
            BenchCase::new(
                name.to_uppercase(),
                graph,
                &[Method::Greedy, Method::Ga],
                0..6,
            )
            .with_params(large_ga_params(2000, 3000))
        })
        .collect()
}

/// Every built-in suite by file stem.
pub fn builtin() -> Vec<(&'static str, Vec<BenchCase>)> {
    vec![
        ("table1", table1()),
        ("table2", table2()),
        ("table3", table3()),
        ("table4", table4()),
        ("table4-user-graphs", table4_user_graphs()),
    ]
}
