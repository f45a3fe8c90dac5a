//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. All comparisons are exact integer (or exact string) equality.

use std::time::Instant;

use cutcomplex::complex::from_facets;
use cutcomplex::cutgen::total_cut_complex;
use cutcomplex::decide::{contractibility_certificate, is_shelling_order};
use cutcomplex::graph::{family, make_graph, Family, Graph};
use cutcomplex::harness::{self, corpus::corpus_200, emit_table, run_suite, Ranges, TableFamily};
use cutcomplex::homology::{betti, homology_oracle_snf};
use cutcomplex::vset::VertexSet;

fn vs(vals: &[usize]) -> VertexSet {
    vals.iter().copied().collect()
}

/// The graph of the worked example: 4-cycle a-b-c-d plus pendants e, f on
/// d, labeled a..f -> 0..5.
fn example_graph() -> Graph {
    make_graph(6, &[(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
}

struct Criterion {
    name: &'static str,
    started: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion { name, started: Instant::now() }
    }

    fn finish(self, pass: bool, detail: String) {
        let ms = self.started.elapsed().as_millis();
        println!(
            "criterion {}: {} ({detail}, {ms} ms)",
            self.name,
            if pass { "PASS" } else { "FAIL" }
        );
        assert!(pass, "criterion {} failed: {detail}", self.name);
    }

    fn finish_suite(self, result: &harness::SuiteResult) {
        let (pass, fail, skip) = result.tally();
        let first_failure = result
            .failures()
            .next()
            .map(|c| format!("; first failure {} expected {} got {}", c.params, c.expected, c.actual))
            .unwrap_or_default();
        self.finish(
            fail == 0 && pass > 0,
            format!("{pass} pass, {fail} fail, {skip} skip{first_failure}"),
        );
    }
}

#[test]
fn criterion_1_facet_golden() {
    let crit = Criterion::new("1 (facet golden)");
    let c = total_cut_complex(&example_graph(), 3).unwrap();

    // the five facets, in the order the example lists them: abd, acd,
    // bcd, bde, bdf
    let listed = [vs(&[0, 1, 3]), vs(&[0, 2, 3]), vs(&[1, 2, 3]), vs(&[1, 3, 4]), vs(&[1, 3, 5])];
    let mut expected = listed.to_vec();
    expected.sort_unstable();
    let facets_ok = c.facets() == expected.as_slice();

    let order: Vec<usize> = listed
        .iter()
        .map(|f| c.facets().iter().position(|g| g == f).unwrap())
        .collect();
    let shelling_ok = is_shelling_order(&c, &order);

    let contractible_ok = contractibility_certificate(&c).is_some()
        && betti(&c).unwrap().all_zero();

    crit.finish(
        facets_ok && shelling_ok && contractible_ok,
        format!("facets {facets_ok}, listed order shells {shelling_ok}, contractible {contractible_ok}"),
    );
}

#[test]
fn criterion_2_bipartite_grid() {
    let crit = Criterion::new("2 (bipartite grid)");
    let ranges = Ranges::parse("m=2..6,n=2..6,k=2..7").unwrap();
    let result = run_suite("bipartite", &ranges).unwrap();
    // spot-check that the S^0 cells are in the run with the right value
    let s0 = result
        .cases
        .iter()
        .filter(|c| {
            (2..=6).any(|k| c.params == format!("m={k},n={k},k={k},betti"))
        })
        .count();
    assert_eq!(s0, 5, "expected one S^0 homology cell per k = m = n");
    for k in 2..=6 {
        let params = format!("m={k},n={k},k={k},betti");
        let cell = result.cases.iter().find(|c| c.params == params).unwrap();
        assert_eq!(cell.expected, "[(0, 1)]", "m = k = n should read as S^0");
    }
    crit.finish_suite(&result);
}

#[test]
fn criterion_3_prism() {
    let crit = Criterion::new("3 (prism)");
    let ranges = Ranges::parse("n=2..6").unwrap();
    let result = run_suite("prism", &ranges).unwrap();
    assert!(
        result.cases.iter().any(|c| c.params == "n=3,critical_set"),
        "the n=3 critical-cell set must be checked explicitly"
    );
    crit.finish_suite(&result);
}

#[test]
fn criterion_4_chordal() {
    let crit = Criterion::new("4 (chordal)");
    let ranges = Ranges::parse("n=1..8,count=30").unwrap();
    let result = run_suite("chordal", &ranges).unwrap();
    let vd_cases = result.cases.iter().filter(|c| c.params.ends_with(",vd")).count();
    assert!(vd_cases >= 240, "240 graphs should contribute vd cases, got {vd_cases}");
    crit.finish_suite(&result);
}

#[test]
fn criterion_5_cycles() {
    let crit = Criterion::new("5 (cycles)");
    let ranges = Ranges::parse("n=4..14,k=2..7").unwrap();
    let result = run_suite("cycles", &ranges).unwrap();
    let facet_cases = result.cases.iter().filter(|c| c.params.ends_with(",facets")).count();
    let expected_cells: usize = (4..=14).map(|n: usize| (n / 2).saturating_sub(1)).sum();
    assert_eq!(facet_cases, expected_cells);
    crit.finish_suite(&result);
}

#[test]
fn criterion_6_grids() {
    let crit = Criterion::new("6 (grids)");
    let result = run_suite("grid", &Ranges::default()).unwrap();
    assert!(
        result.cases.iter().any(|c| c.params == "m=3,n=3,k=2,critical_set"),
        "the G(3,3) starred faces must be checked explicitly"
    );
    crit.finish_suite(&result);
}

#[test]
fn criterion_7_squared_cycles() {
    let crit = Criterion::new("7 (squared cycles)");
    let ranges = Ranges::parse("n=6..10").unwrap();
    let result = run_suite("squared_cycle", &ranges).unwrap();
    assert!(result.cases.iter().any(|c| c.params == "n=6,k=2,facets"));
    crit.finish_suite(&result);
}

#[test]
fn criterion_8_tables() {
    let crit = Criterion::new("8 (tables)");
    let cap = 1 << 18;

    let g2n = emit_table(TableFamily::G2n, 8, 6, cap).unwrap();
    #[rustfmt::skip]
    let table1: &[(usize, [&str; 5])] = &[
        (1, ["β_2=1", "β_4=1", "β_6=1", "β_8=1",  "β_10=1"]),
        (2, ["β_0=1", "β_2=2", "β_4=3", "β_6=4",  "β_8=5"]),
        (3, ["void",  "β_0=1", "β_2=3", "β_4=6",  "β_6=10"]),
        (4, ["void",  "void",  "β_0=1", "β_2=4",  "β_4=10"]),
        (5, ["void",  "void",  "void",  "β_0=1",  "β_2=5"]),
        (6, ["void",  "void",  "void",  "void",   "β_0=1"]),
        (7, ["void",  "void",  "void",  "void",   "void"]),
        (8, ["void",  "void",  "void",  "void",   "void"]),
    ];
    let mut mismatches = Vec::new();
    for &(k, row) in table1 {
        for (j, want) in row.iter().enumerate() {
            let n = j + 2;
            let got = g2n.get(k, n).unwrap();
            if got != *want {
                mismatches.push(format!("G(2,{n}) k={k}: want {want} got {got}"));
            }
        }
    }

    let g3n = emit_table(TableFamily::G3n, 8, 5, cap).unwrap();
    #[rustfmt::skip]
    let table2: &[(usize, [&str; 3])] = &[
        (1, ["β_7=1",         "β_10=1", "β_13=1"]),
        (2, ["β_5=4",         "β_8=6",  "β_11=8"]),
        (3, ["β_3=6",         "β_6=15", "β_9=28"]),
        (4, ["β_1=4",         "β_4=20", "β_7=56"]),
        (5, ["β_i=0, i ≥ 0",  "β_2=13", "β_5=67"]),
        (6, ["void",          "β_0=1",  "β_3=42"]),
        (7, ["void",          "void",   "β_1=7"]),
        (8, ["void",          "void",   "β_i=0, i ≥ 0"]),
    ];
    for &(k, row) in table2 {
        for (j, want) in row.iter().enumerate() {
            let n = j + 3;
            let got = g3n.get(k, n).unwrap();
            if got != *want {
                mismatches.push(format!("G(3,{n}) k={k}: want {want} got {got}"));
            }
        }
    }

    let checked = 40 + 24;
    crit.finish(
        mismatches.is_empty(),
        format!("{checked} cells checked{}", match mismatches.first() {
            Some(m) => format!("; first mismatch {m}"),
            None => String::new(),
        }),
    );
}

#[test]
fn criterion_9_structural_properties() {
    let crit = Criterion::new("9 (structural property suite)");
    let ranges = Ranges::default(); // the 200-graph corpus, all valid k
    let suites = [
        "nesting",
        "link_lemma",
        "deletion_lemma",
        "ridge_facet",
        "isolated_decomposition",
        "suspension",
        "les_euler",
    ];
    let mut total_pass = 0;
    let mut failures = Vec::new();
    for id in suites {
        let result = run_suite(id, &ranges).unwrap();
        let (pass, fail, _skip) = result.tally();
        total_pass += pass;
        if fail > 0 {
            let c = result.failures().next().unwrap();
            failures.push(format!(
                "{id}: {} expected {} got {}",
                c.params, c.expected, c.actual
            ));
        }
    }
    crit.finish(
        failures.is_empty() && total_pass > 0,
        format!("{total_pass} cases over 7 suites{}", match failures.first() {
            Some(f) => format!("; first failure {f}"),
            None => String::new(),
        }),
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    let crit = Criterion::new("10 (oracle equivalence)");
    // the structural corpus plus the named instances used elsewhere, every
    // complex capped at 2^14 faces
    let mut complexes = Vec::new();
    for g in corpus_200(20_240_807) {
        for k in 1..=g.independence_number() {
            complexes.push(total_cut_complex(&g, k).unwrap());
        }
    }
    for g in [
        family(Family::Cycle(9)).unwrap(),
        family(Family::Cycle(10)).unwrap(),
        family(Family::Prism(4)).unwrap(),
        family(Family::Grid(3, 3)).unwrap(),
        family(Family::SquaredCycle(8)).unwrap(),
        family(Family::CompleteBipartite(3, 4)).unwrap(),
    ] {
        for k in 1..=g.independence_number().min(4) {
            complexes.push(total_cut_complex(&g, k).unwrap());
        }
    }
    complexes.push(from_facets(2, vec![VertexSet::EMPTY]).unwrap());

    let mut compared = 0usize;
    let mut torsion_hits = 0usize;
    let mut mismatches = Vec::new();
    for c in &complexes {
        if c.face_count(1 << 14).is_err() {
            continue; // beyond the oracle's corpus bound
        }
        let fast = betti(c).unwrap();
        let oracle = homology_oracle_snf(c).unwrap();
        compared += 1;
        if fast.betti != oracle.betti || fast.f != oracle.f {
            mismatches.push(format!("{c:?}"));
        }
        if oracle.torsion_found {
            torsion_hits += 1;
        }
    }
    crit.finish(
        mismatches.is_empty() && torsion_hits == 0 && compared > 200,
        format!("{compared} complexes compared, {torsion_hits} torsion reports"),
    );
}
