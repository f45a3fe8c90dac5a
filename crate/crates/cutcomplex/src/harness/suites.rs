//! The verification suites: each case pits a closed-form prediction against
//! engine-computed values, or two independent computation routes against
//! each other.

use super::corpus::{corpus_200, random_chordal, random_tree};
use super::{CaseResult, Ranges};
use crate::complex::{from_facets, simplex, SimplicialComplex};
use crate::cutgen::{
    next_total_from_ridges, realizability_scan, total_cut_complex, verify_isolated_decomposition,
};
use crate::decide::{
    contractibility_certificate, find_shelling, is_vertex_decomposable,
    non_shellability_obstruction,
};
use crate::error::Result;
use crate::graph::{family, Family, Graph};
use crate::homology::{betti, euler_characteristic_reduced, BettiReport};
use crate::morse::{
    element_matching_sequence, morse_report, preset_schedule, Certificate, PresetFamily,
};
use crate::par::{self, ExecMode};
use crate::vset::VertexSet;

type Job = Box<dyn FnOnce() -> Vec<CaseResult> + Send>;

fn run_jobs(mode: ExecMode, jobs: Vec<Job>) -> Vec<CaseResult> {
    par::map(mode, jobs, |j| j()).into_iter().flatten().collect()
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Canonical rendering of a Betti report: `void` or the nonzero
/// (dimension, value) pairs.
fn profile(r: &BettiReport) -> String {
    if r.void {
        "void".into()
    } else {
        format!("{:?}", r.nonzero())
    }
}

fn facets_str(c: &SimplicialComplex) -> String {
    format!("{:?}", c.facets())
}

fn betti_or_msg(c: &SimplicialComplex) -> std::result::Result<BettiReport, String> {
    betti(c).map_err(|e| format!("resource: {e}"))
}

/// Relabels a complex built on an induced subgraph back into the labels of
/// the big graph: `keep[i]` is the old name of new vertex `i`.
fn lift(c: &SimplicialComplex, keep: &[usize], ground: usize) -> SimplicialComplex {
    let facets = c
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| keep[v]).collect())
        .collect();
    from_facets(ground, facets).expect("kept labels are in the big ground")
}

fn graph_label(idx: usize, g: &Graph) -> String {
    match g.name() {
        Some(name) => format!("g{idx}({name})"),
        None => format!("g{idx}"),
    }
}

/// Graphs to iterate plus valid k ranges, the shared corpus-driven shape.
fn corpus_jobs(
    ranges: &Ranges,
    per_graph: impl Fn(usize, Graph) -> Vec<CaseResult> + Send + Sync + Clone + 'static,
) -> Vec<Job> {
    corpus_200(ranges.seed_or(20_240_807))
        .into_iter()
        .enumerate()
        .map(|(idx, g)| {
            let f = per_graph.clone();
            Box::new(move || f(idx, g)) as Job
        })
        .collect()
}

pub(super) fn ridge_facet(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        for k in 2..=alpha {
            let params = format!("{},k={k}", graph_label(idx, &g));
            let current = total_cut_complex(&g, k).expect("k >= 2");
            let expected = total_cut_complex(&g, k + 1).expect("k + 1 >= 3");
            match next_total_from_ridges(&current, k) {
                Ok(got) => out.push(CaseResult::check(
                    params,
                    facets_str(&expected),
                    facets_str(&got),
                )),
                Err(e) => out.push(CaseResult::skip(params, e.to_string())),
            }
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

pub(super) fn isolated_decomposition(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        for k in 2..=alpha + 1 {
            let params = format!("{},k={k}", graph_label(idx, &g));
            match verify_isolated_decomposition(&g, k) {
                Ok(ok) => out.push(CaseResult::check(params, "identity holds", if ok {
                    "identity holds".into()
                } else {
                    "identity fails".to_string()
                })),
                Err(e) => out.push(CaseResult::skip(params, e.to_string())),
            }
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

pub(super) fn link_lemma(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        for k in 2..=alpha {
            let params = format!("{},k={k}", graph_label(idx, &g));
            let c = total_cut_complex(&g, k).expect("k >= 2");
            let fi = match c.face_index(1 << 16) {
                Ok(fi) => fi,
                Err(e) => {
                    out.push(CaseResult::skip(params, e.to_string()));
                    continue;
                }
            };
            let mut mismatches = Vec::new();
            let mut total = 0u64;
            for level in &fi.by_card {
                for &w in level {
                    total += 1;
                    let link = c.link(w).expect("w is a face");
                    let keep: Vec<usize> =
                        (0..g.n()).filter(|&v| !w.contains(v)).collect();
                    let rebuilt =
                        total_cut_complex(&g.induced_subgraph(w.complement_in(g.n())), k)
                            .expect("k >= 2");
                    if lift(&rebuilt, &keep, g.n()) != link {
                        mismatches.push(w);
                    }
                }
            }
            out.push(CaseResult::check(
                params,
                format!("0 of {total} faces mismatch"),
                format!("{} of {total} faces mismatch{}", mismatches.len(), match mismatches.first() {
                    Some(w) => format!(" (first at W={w})"),
                    None => String::new(),
                }),
            ));
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

pub(super) fn deletion_lemma(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        for k in 2..=alpha {
            let c = total_cut_complex(&g, k).expect("k >= 2");
            if c.is_void() {
                continue;
            }
            let simplicial = g.simplicial_vertices();
            if simplicial.is_empty() {
                continue;
            }
            let params = format!("{},k={k}", graph_label(idx, &g));
            let mut mismatches = Vec::new();
            for v in simplicial.iter() {
                let del = c.deletion(VertexSet::singleton(v));
                let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
                let h = g.remove_vertex(v);
                let nv_relabeled: VertexSet = g
                    .neighbors(v)
                    .iter()
                    .map(|u| keep.iter().position(|&x| x == u).expect("u != v"))
                    .collect();
                let lower = total_cut_complex(&h, k - 1).expect("k - 1 >= 1");
                let star = lower.star(nv_relabeled);
                if lift(&star, &keep, g.n()) != del {
                    mismatches.push(v);
                }
            }
            out.push(CaseResult::check(
                params,
                format!("0 of {} simplicial vertices mismatch", simplicial.len()),
                format!(
                    "{} of {} simplicial vertices mismatch",
                    mismatches.len(),
                    simplicial.len()
                ),
            ));
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

fn suspension_pool(ranges: &Ranges) -> Vec<Graph> {
    let mut pool = corpus_200(ranges.seed_or(20_240_807));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(
        ranges.seed_or(20_240_807) ^ 0x5u64,
    );
    for _ in 0..10 {
        pool.push(random_chordal(9, &mut rng));
    }
    for n in 3..=5 {
        // prism minus the vertex n+, whose twin n- goes simplicial
        let prism = family(Family::Prism(n)).unwrap();
        pool.push(prism.remove_vertex(n - 1).with_name(format!("prism{n}-minus")));
    }
    pool
}

pub(super) fn suspension(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let pool = suspension_pool(ranges);
    let jobs: Vec<Job> = pool
        .into_iter()
        .enumerate()
        .map(|(idx, g)| {
            Box::new(move || {
                let alpha = g.independence_number();
                let mut out = Vec::new();
                for k in 2..=alpha {
                    for v in g.simplicial_vertices().iter() {
                        if g.neighbors(v).is_empty() {
                            continue;
                        }
                        let h = g.remove_vertex(v);
                        let ch = total_cut_complex(&h, k).expect("k >= 2");
                        if ch.is_void() {
                            continue;
                        }
                        let params = format!("{},k={k},v={v}", graph_label(idx, &g));
                        let cg = total_cut_complex(&g, k).expect("k >= 2");
                        let (rh, rg) = match (betti_or_msg(&ch), betti_or_msg(&cg)) {
                            (Ok(a), Ok(b)) => (a, b),
                            (Err(e), _) | (_, Err(e)) => {
                                out.push(CaseResult::skip(params, e));
                                continue;
                            }
                        };
                        let shifted: Vec<(i64, u64)> =
                            rh.nonzero().into_iter().map(|(d, b)| (d + 1, b)).collect();
                        out.push(CaseResult::check(
                            params,
                            format!("{shifted:?}"),
                            format!("{:?}", rg.nonzero()),
                        ));
                    }
                }
                out
            }) as Job
        })
        .collect();
    Ok(run_jobs(mode, jobs))
}

pub(super) fn les_euler(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        let Ok(extended) = g.add_isolated_vertex() else {
            return out;
        };
        for k in 2..=alpha {
            let params = format!("{},k={k}", graph_label(idx, &g));
            let run = || -> crate::error::Result<(i64, i64)> {
                let lower = euler_characteristic_reduced(&total_cut_complex(&g, k - 1)?)?;
                let upper = euler_characteristic_reduced(&total_cut_complex(&g, k)?)?;
                let joined = euler_characteristic_reduced(&total_cut_complex(&extended, k)?)?;
                Ok((lower - upper, joined))
            };
            match run() {
                Ok((expected, actual)) => {
                    out.push(CaseResult::check(params, expected.to_string(), actual.to_string()))
                }
                Err(e) => out.push(CaseResult::skip(params, e.to_string())),
            }
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

pub(super) fn nesting(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let jobs = corpus_jobs(ranges, |idx, g| {
        let alpha = g.independence_number();
        let mut out = Vec::new();
        for k in 1..=alpha {
            let params = format!("{},k={k}", graph_label(idx, &g));
            let big = total_cut_complex(&g, k).expect("k >= 1");
            let small = total_cut_complex(&g, k + 1).expect("k + 1 >= 2");
            let violation = small.facets().iter().find(|f| !big.is_face(**f));
            out.push(CaseResult::check(
                params,
                "contained".to_string(),
                match violation {
                    None => "contained".into(),
                    Some(f) => format!("facet {f} escapes"),
                },
            ));
        }
        out
    });
    Ok(run_jobs(mode, jobs))
}

pub(super) fn edgeless(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(2, 8);
    let mut jobs: Vec<Job> = Vec::new();
    for n in n_lo..=n_hi {
        for k in 2..=n {
            jobs.push(Box::new(move || {
                let g = family(Family::Edgeless(n)).expect("n >= 1");
                let c = total_cut_complex(&g, k).expect("k >= 2");
                let skel = simplex(n).skeleton(n as i64 - k as i64 - 1).expect("dim >= -1");
                let params = format!("n={n},k={k}");
                let mut out = vec![CaseResult::check(
                    format!("{params},skeleton"),
                    facets_str(&skel),
                    facets_str(&c),
                )];
                match betti_or_msg(&c) {
                    Ok(r) => out.push(CaseResult::check(
                        format!("{params},betti"),
                        format!("{:?}", vec![(n as i64 - k as i64 - 1, binom(n - 1, k - 1))]),
                        profile(&r),
                    )),
                    Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
                }
                out
            }));
        }
    }
    Ok(run_jobs(mode, jobs))
}

pub(super) fn bipartite(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (m_lo, m_hi) = ranges.m_or(2, 6);
    let (_, n_hi) = ranges.n_or(2, 6);
    let (k_lo, k_hi) = ranges.k_or(2, 7);
    let mut jobs: Vec<Job> = Vec::new();
    for m in m_lo..=m_hi {
        for n in m..=n_hi {
            for k in k_lo..=k_hi.min(n + 1) {
                jobs.push(Box::new(move || bipartite_cell(m, n, k)));
            }
        }
    }
    Ok(run_jobs(mode, jobs))
}

fn bipartite_cell(m: usize, n: usize, k: usize) -> Vec<CaseResult> {
    let params = format!("m={m},n={n},k={k}");
    let g = family(Family::CompleteBipartite(m, n)).expect("m, n >= 1");
    let c = total_cut_complex(&g, k).expect("k >= 2");
    let mut out = Vec::new();

    if k > n {
        out.push(CaseResult::check(
            format!("{params},void"),
            "void",
            if c.is_void() { "void" } else { "nonvoid" },
        ));
    } else if k > m {
        // contractible: join of a simplex with a skeleton
        match betti_or_msg(&c) {
            Ok(r) => out.push(CaseResult::check(format!("{params},betti"), "[]", profile(&r))),
            Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
        }
        out.push(CaseResult::check(
            format!("{params},contractible"),
            "certified",
            match contractibility_certificate(&c) {
                Some(_) => "certified".into(),
                None => "no certificate".to_string(),
            },
        ));
    } else {
        // 2 <= k <= m <= n: wedge of spheres via both routes
        let count = binom(m - 1, k - 1) * binom(n - 1, k - 1);
        let dim = (m + n - 2 * k) as i64;
        match betti_or_msg(&c) {
            Ok(r) => out.push(CaseResult::check(
                format!("{params},betti"),
                format!("{:?}", vec![(dim, count)]),
                profile(&r),
            )),
            Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
        }
        let schedule = preset_schedule(PresetFamily::Bipartite { m, n }).expect("m, n >= 1");
        let cert = element_matching_sequence(&c, &schedule)
            .and_then(|mat| morse_report(&c, &mat, None));
        out.push(match cert {
            Ok(rep) => CaseResult::check(
                format!("{params},morse"),
                format!("{:?}", Certificate::WedgeOfSpheres { dim, count }),
                format!("{:?}", rep.certificate),
            ),
            Err(e) => CaseResult::skip(format!("{params},morse"), e.to_string()),
        });
    }

    // shellable iff m < k, searched within the facet cap
    let shellable_expected = m < k;
    match find_shelling(&c, crate::DEFAULT_FACET_CAP) {
        Ok(order) => out.push(CaseResult::check(
            format!("{params},shelling"),
            if shellable_expected { "shellable" } else { "unshellable" },
            if order.is_some() { "shellable" } else { "unshellable" },
        )),
        Err(e) => out.push(CaseResult::skip(format!("{params},shelling"), e.to_string())),
    }
    out
}

pub(super) fn prism(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(2, 6);
    let jobs: Vec<Job> = (n_lo.max(2)..=n_hi)
        .map(|n| {
            Box::new(move || {
                let params = format!("n={n}");
                let g = family(Family::Prism(n)).expect("n >= 1");
                let c = total_cut_complex(&g, 2).expect("k = 2");
                let dim = 2 * n as i64 - 4;
                let wedge = (n - 1) as u64;
                let mut out = Vec::new();
                match betti_or_msg(&c) {
                    Ok(r) => out.push(CaseResult::check(
                        format!("{params},betti"),
                        format!("{:?}", vec![(dim, wedge)]),
                        profile(&r),
                    )),
                    Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
                }
                let schedule = preset_schedule(PresetFamily::Prism { n }).expect("n >= 2");
                match element_matching_sequence(&c, &schedule) {
                    Ok(mat) => {
                        let crit: Vec<VertexSet> = mat.critical_cells().collect();
                        out.push(CaseResult::check(
                            format!("{params},critical_census"),
                            format!("{} cells of size {}", n - 1, 2 * n - 3),
                            {
                                let sizes_ok =
                                    crit.iter().all(|f| f.len() == 2 * n - 3);
                                if sizes_ok {
                                    format!("{} cells of size {}", crit.len(), 2 * n - 3)
                                } else {
                                    format!("{} cells of mixed sizes", crit.len())
                                }
                            },
                        ));
                        match morse_report(&c, &mat, None) {
                            Ok(rep) => out.push(CaseResult::check(
                                format!("{params},morse"),
                                format!("{:?}", Certificate::WedgeOfSpheres { dim, count: wedge }),
                                format!("{:?}", rep.certificate),
                            )),
                            Err(e) => out
                                .push(CaseResult::skip(format!("{params},morse"), e.to_string())),
                        }
                        if n == 3 {
                            let expected: Vec<VertexSet> = vec![
                                [1, 3, 4].into_iter().collect(),
                                [2, 3, 5].into_iter().collect(),
                            ];
                            out.push(CaseResult::check(
                                format!("{params},critical_set"),
                                format!("{expected:?}"),
                                format!("{crit:?}"),
                            ));
                        }
                    }
                    Err(e) => {
                        out.push(CaseResult::skip(format!("{params},morse"), e.to_string()))
                    }
                }
                out
            }) as Job
        })
        .collect();
    Ok(run_jobs(mode, jobs))
}

pub(super) fn chordal(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(1, 8);
    let count = ranges.count_or(30);
    let seed = ranges.seed_or(20_240_807);
    let mut jobs: Vec<Job> = Vec::new();
    for n in n_lo..=n_hi {
        for i in 0..count {
            jobs.push(Box::new(move || {
                // one independent stream per graph so parallel order is moot
                let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(
                    seed ^ (n as u64) << 32 ^ i as u64,
                );
                let g = random_chordal(n, &mut rng);
                let label = format!("n={n},i={i}");
                if !g.is_chordal() {
                    return vec![CaseResult::check(
                        format!("{label},chordal"),
                        "chordal",
                        "not chordal",
                    )];
                }
                let c_components = g.components().len();
                let alpha = g.independence_number();
                let mut out = Vec::new();
                for k in 2..=alpha + 1 {
                    let params = format!("{label},k={k}");
                    let complex = total_cut_complex(&g, k).expect("k >= 2");
                    match is_vertex_decomposable(&complex) {
                        Ok(w) => out.push(CaseResult::check(
                            format!("{params},vd"),
                            "vertex decomposable",
                            if w.is_some() {
                                "vertex decomposable"
                            } else {
                                "not vertex decomposable"
                            },
                        )),
                        Err(e) => {
                            out.push(CaseResult::skip(format!("{params},vd"), e.to_string()))
                        }
                    }
                    let expected = if k > alpha {
                        "void".to_string()
                    } else if c_components >= k {
                        format!(
                            "{:?}",
                            vec![(
                                g.n() as i64 - k as i64 - 1,
                                binom(c_components - 1, k - 1)
                            )]
                        )
                    } else {
                        "[]".to_string()
                    };
                    match betti_or_msg(&complex) {
                        Ok(r) => out.push(CaseResult::check(
                            format!("{params},betti"),
                            expected,
                            profile(&r),
                        )),
                        Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
                    }
                }
                out
            }));
        }
    }
    Ok(run_jobs(mode, jobs))
}

pub(super) fn trees(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(2, 8);
    let count = ranges.count_or(20);
    let seed = ranges.seed_or(20_240_807);
    let mut jobs: Vec<Job> = Vec::new();
    for n in n_lo..=n_hi {
        for i in 0..count {
            jobs.push(Box::new(move || {
                let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(
                    seed ^ ((n as u64) << 40) ^ (i as u64) ^ 0x7472,
                );
                let g = random_tree(n, &mut rng);
                let alpha = g.independence_number();
                let mut out = Vec::new();
                for k in 2..=alpha {
                    let params = format!("n={n},i={i},k={k}");
                    let c = total_cut_complex(&g, k).expect("k >= 2");
                    match betti_or_msg(&c) {
                        Ok(r) => {
                            out.push(CaseResult::check(params, "[]".to_string(), profile(&r)))
                        }
                        Err(e) => out.push(CaseResult::skip(params, e)),
                    }
                }
                out
            }));
        }
    }
    Ok(run_jobs(mode, jobs))
}

pub(super) fn cycles(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(4, 14);
    let (k_lo, k_hi) = ranges.k_or(2, 7);
    let mut jobs: Vec<Job> = Vec::new();
    for n in n_lo.max(3)..=n_hi {
        for k in k_lo.max(2)..=k_hi.min(n / 2) {
            jobs.push(Box::new(move || cycle_cell(n, k)));
        }
    }
    Ok(run_jobs(mode, jobs))
}

fn cycle_cell(n: usize, k: usize) -> Vec<CaseResult> {
    let params = format!("n={n},k={k}");
    let g = family(Family::Cycle(n)).expect("n >= 3");
    let c = total_cut_complex(&g, k).expect("k >= 2");
    let mut out = Vec::new();

    // facet count n / (n-k) * C(n-k, k)
    let expected_facets = (n as u64 * binom(n - k, k)) / (n - k) as u64;
    out.push(CaseResult::check(
        format!("{params},facets"),
        expected_facets.to_string(),
        c.facets().len().to_string(),
    ));

    let sphere_dim = n as i64 - 2 * k as i64;
    match betti_or_msg(&c) {
        Ok(r) => {
            out.push(CaseResult::check(
                format!("{params},betti"),
                format!("{:?}", vec![(sphere_dim, 1u64)]),
                profile(&r),
            ));
            match non_shellability_obstruction(&c, &r) {
                Ok(ob) => out.push(CaseResult::check(
                    format!("{params},obstruction"),
                    format!("obstruction in dim {sphere_dim}"),
                    match ob {
                        Some(ob) => format!("obstruction in dim {}", ob.dim),
                        None => "no obstruction".into(),
                    },
                )),
                Err(e) => {
                    out.push(CaseResult::skip(format!("{params},obstruction"), e.to_string()))
                }
            }
        }
        Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
    }

    match preset_schedule(PresetFamily::Cycle { n, k }) {
        Ok(schedule) => match element_matching_sequence(&c, &schedule) {
            Ok(mat) => {
                let crit: Vec<VertexSet> = mat.critical_cells().collect();
                out.push(CaseResult::check(
                    format!("{params},critical_census"),
                    format!("1 cell of size {}", n - 2 * k + 1),
                    if crit.len() == 1 {
                        format!("1 cell of size {}", crit[0].len())
                    } else {
                        format!("{} cells", crit.len())
                    },
                ));
                match morse_report(&c, &mat, None) {
                    Ok(rep) => out.push(CaseResult::check(
                        format!("{params},morse"),
                        format!("{:?}", Certificate::WedgeOfSpheres { dim: sphere_dim, count: 1 }),
                        format!("{:?}", rep.certificate),
                    )),
                    Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
                }
            }
            Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
        },
        Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
    }
    out
}

pub(super) fn grid(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let cells: Vec<(usize, usize)> = match (ranges.m, ranges.n) {
        (Some((m_lo, m_hi)), Some((n_lo, n_hi))) => (m_lo..=m_hi)
            .flat_map(|m| (n_lo..=n_hi).map(move |n| (m, n)))
            .collect(),
        _ => {
            let mut v: Vec<(usize, usize)> = (2..=6).map(|n| (2, n)).collect();
            v.extend((3..=4).map(|n| (3, n)));
            v
        }
    };
    let jobs: Vec<Job> = cells
        .into_iter()
        .map(|(m, n)| Box::new(move || grid_cell(m, n)) as Job)
        .collect();
    Ok(run_jobs(mode, jobs))
}

fn grid_cell(m: usize, n: usize) -> Vec<CaseResult> {
    let params = format!("m={m},n={n},k=2");
    let g = family(Family::Grid(m, n)).expect("m, n >= 1");
    let c = total_cut_complex(&g, 2).expect("k = 2");
    let dim = (m * n) as i64 - 4;
    let wedge = ((m - 1) * (n - 1)) as u64;
    let mut out = Vec::new();
    match betti_or_msg(&c) {
        Ok(r) => out.push(CaseResult::check(
            format!("{params},betti"),
            format!("{:?}", vec![(dim, wedge)]),
            profile(&r),
        )),
        Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
    }
    match preset_schedule(PresetFamily::Grid { m, n })
        .and_then(|s| element_matching_sequence(&c, &s))
    {
        Ok(mat) => {
            match morse_report(&c, &mat, None) {
                Ok(rep) => out.push(CaseResult::check(
                    format!("{params},morse"),
                    format!("{:?}", Certificate::WedgeOfSpheres { dim, count: wedge }),
                    format!("{:?}", rep.certificate),
                )),
                Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
            }
            if (m, n) == (3, 3) {
                // the four faces starred in the worked example
                let full = VertexSet::full(9);
                let mut expected: Vec<VertexSet> = [[0, 3, 4], [0, 4, 5], [0, 6, 7], [0, 7, 8]]
                    .into_iter()
                    .map(|rm| full - rm.into_iter().collect())
                    .collect();
                expected.sort_unstable();
                let mut crit: Vec<VertexSet> = mat.critical_cells().collect();
                crit.sort_unstable();
                out.push(CaseResult::check(
                    format!("{params},critical_set"),
                    format!("{expected:?}"),
                    format!("{crit:?}"),
                ));
            }
        }
        Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
    }
    out
}

pub(super) fn squared_cycle(ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = ranges.n_or(6, 10);
    let mut jobs: Vec<Job> = Vec::new();
    if n_lo <= 6 && 6 <= n_hi {
        jobs.push(Box::new(|| {
            let g = family(Family::SquaredCycle(6)).expect("n >= 3");
            let c = total_cut_complex(&g, 2).expect("k = 2");
            let mut expected: Vec<VertexSet> = vec![
                [0, 1, 3, 4].into_iter().collect(),
                [1, 2, 4, 5].into_iter().collect(),
                [2, 3, 5, 0].into_iter().collect(),
            ];
            expected.sort_unstable();
            let mut out = vec![CaseResult::check(
                "n=6,k=2,facets",
                format!("{expected:?}"),
                facets_str(&c),
            )];
            match betti_or_msg(&c) {
                Ok(r) => out.push(CaseResult::check(
                    "n=6,k=2,betti",
                    format!("{:?}", vec![(1i64, 1u64)]),
                    profile(&r),
                )),
                Err(e) => out.push(CaseResult::skip("n=6,k=2,betti", e)),
            }
            out
        }));
    }
    for n in n_lo.max(7)..=n_hi {
        jobs.push(Box::new(move || {
            let params = format!("n={n},k=2");
            let g = family(Family::SquaredCycle(n)).expect("n >= 3");
            let c = total_cut_complex(&g, 2).expect("k = 2");
            let dim = n as i64 - 4;
            let mut out = Vec::new();
            match betti_or_msg(&c) {
                Ok(r) => out.push(CaseResult::check(
                    format!("{params},betti"),
                    format!("{:?}", vec![(dim, 1u64)]),
                    profile(&r),
                )),
                Err(e) => out.push(CaseResult::skip(format!("{params},betti"), e)),
            }
            match preset_schedule(PresetFamily::SquaredCycle { n })
                .and_then(|s| element_matching_sequence(&c, &s))
            {
                Ok(mat) => {
                    let crit: Vec<VertexSet> = mat.critical_cells().collect();
                    out.push(CaseResult::check(
                        format!("{params},critical_census"),
                        format!("1 cell of size {}", n - 3),
                        if crit.len() == 1 {
                            format!("1 cell of size {}", crit[0].len())
                        } else {
                            format!("{} cells", crit.len())
                        },
                    ));
                    match morse_report(&c, &mat, None) {
                        Ok(rep) => out.push(CaseResult::check(
                            format!("{params},morse"),
                            format!("{:?}", Certificate::WedgeOfSpheres { dim, count: 1 }),
                            format!("{:?}", rep.certificate),
                        )),
                        Err(e) => {
                            out.push(CaseResult::skip(format!("{params},morse"), e.to_string()))
                        }
                    }
                }
                Err(e) => out.push(CaseResult::skip(format!("{params},morse"), e.to_string())),
            }
            out
        }));
    }
    Ok(run_jobs(mode, jobs))
}

pub(super) fn realizability(_ranges: &Ranges, mode: ExecMode) -> Result<Vec<CaseResult>> {
    let vs = |vals: &[usize]| -> VertexSet { vals.iter().copied().collect() };
    let mut out = Vec::new();

    // facets {1,2,3},{1,3,4},{1,5,6} (1-based) force {1,3,6} as well
    let required = [vs(&[0, 1, 2]), vs(&[0, 2, 3]), vs(&[0, 4, 5])];
    let probe = vs(&[0, 2, 5]);
    match realizability_scan(&required, 6, 3, Some(probe), mode) {
        Ok(scan) => {
            out.push(CaseResult::check(
                "forced_facet",
                "witnesses > 0 with 0 violations",
                if scan.witnesses > 0 && scan.probe_violations == 0 {
                    "witnesses > 0 with 0 violations".into()
                } else {
                    format!("{} witnesses, {} violations", scan.witnesses, scan.probe_violations)
                },
            ));
        }
        Err(e) => out.push(CaseResult::skip("forced_facet", e.to_string())),
    }

    // the example graph's own facets are realizable (by that graph)
    let g = crate::graph::make_graph(6, &[(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)])
        .expect("in range");
    let facets = total_cut_complex(&g, 3).expect("k = 3").facets().to_vec();
    match realizability_scan(&facets, 6, 3, None, mode) {
        Ok(scan) => out.push(CaseResult::check(
            "example_graph_witness",
            "witness found",
            if scan.first_witness.is_some() { "witness found" } else { "no witness".into() },
        )),
        Err(e) => out.push(CaseResult::skip("example_graph_witness", e.to_string())),
    }

    // two disjoint facets covering [6]: first witness in scan order is the
    // edgeless graph
    let required = [vs(&[0, 1, 2]), vs(&[3, 4, 5])];
    match realizability_scan(&required, 6, 3, None, mode) {
        Ok(scan) => out.push(CaseResult::check(
            "disjoint_cover_first_witness",
            "edgeless witness",
            match &scan.first_witness {
                Some(w) if w.edge_count() == 0 => "edgeless witness".into(),
                Some(w) => format!("witness with {} edges", w.edge_count()),
                None => "no witness".into(),
            },
        )),
        Err(e) => out.push(CaseResult::skip("disjoint_cover_first_witness", e.to_string())),
    }
    Ok(out)
}
