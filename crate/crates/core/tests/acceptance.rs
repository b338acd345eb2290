//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is an exact integer or boolean
//! check; the per-criterion time limits are the only tolerances.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vnum_core::beialgebra::{
    admissible_path_basis, combined_cut_basis, edge_ideal_gens, intersect_primes, oracle_vnumber_at_prime,
    prime_component, transversal_sum_basis, vnumber, vnumber_at_prime,
};
use vnum_core::cyclelab::{global_bounds, localized_bounds, saturation_by_f_holds, saturation_by_x_holds, verify_cycle};
use vnum_core::graphcore::families::{connected_graphs_up_to_iso, cycle, path};
use vnum_core::graphcore::{enumerate_min_cuts, gamma_c, gamma_c_pair, is_minimal_kcut, min_cut_sets, Graph};
use vnum_core::matroidtrans::{delta_family, min_transversal_weight, transversal_ideal_generic};
use vnum_core::polykernel::{buchberger, colon_ideal, radical_membership};
use vnum_core::{Limits, MonomialOrder, VertexSet};

type Outcome = Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

fn graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| connected_graphs_up_to_iso(n).unwrap()).collect()
}

fn fail(g: &Graph, s: VertexSet, what: String) -> String {
    format!("n={} edges={:?} S={s}: {what}", g.n(), g.edges())
}

/// Connected graphs up to n = 6 with every minimal 2-cut, plus labelled
/// paths and cycles.
fn two_cut_sample() -> Vec<(Graph, VertexSet)> {
    let mut gs = graphs(6);
    for n in 3..=6 {
        gs.push(path(n).unwrap());
        gs.push(cycle(n).unwrap());
    }
    let mut out = Vec::new();
    for g in gs {
        for s in min_cut_sets(&g).unwrap() {
            if !s.is_empty() && is_minimal_kcut(&g, s).unwrap().k == 2 {
                out.push((g.clone(), s));
            }
        }
    }
    out
}

fn empty_cut_equals_domination() -> Outcome {
    let mut count = 0;
    for g in graphs(5).into_iter().filter(|g| !g.is_complete()) {
        let v = vnumber_at_prime(&g, VertexSet::EMPTY, &lim()).map_err(|e| e.to_string())?.v;
        let gc = gamma_c(&g).map_err(|e| e.to_string())?.0;
        if v != gc {
            return Err(fail(&g, VertexSet::EMPTY, format!("v = {v}, connected domination = {gc}")));
        }
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn two_cuts_equal_pair_domination() -> Outcome {
    let sample = two_cut_sample();
    if sample.len() < 25 {
        return Err(format!("only {} pairs", sample.len()));
    }
    for (g, s) in &sample {
        let v = vnumber_at_prime(g, *s, &lim()).map_err(|e| e.to_string())?.v;
        let c = gamma_c_pair(g, *s).map_err(|e| e.to_string())?.0;
        if v != c {
            return Err(fail(g, *s, format!("v = {v}, pair domination = {c}")));
        }
    }
    Ok(format!("{} (graph, cut) pairs", sample.len()))
}

fn cycle_globals() -> Outcome {
    let mut parts = Vec::new();
    for n in 6..=8 {
        let v = vnumber(&cycle(n).unwrap(), &lim()).map_err(|e| e.to_string())?.global_v.ok_or("no value")?;
        let w = global_bounds(n).map_err(|e| e.to_string())?;
        let ceiling = (2 * n).div_ceil(3);
        let ok = if n == 6 { v == 4 } else { w.contains(v) && v <= ceiling };
        if !ok {
            return Err(format!("C{n}: v = {v}, window [{}, {}]", w.lo, w.hi));
        }
        parts.push(format!("C{n}={v}"));
    }
    Ok(parts.join(" "))
}

fn transversal_upper_bound() -> Outcome {
    let sample = two_cut_sample();
    let mut equalities = 0;
    for (g, s) in &sample {
        let v = vnumber_at_prime(g, *s, &lim()).map_err(|e| e.to_string())?.v;
        let w = min_transversal_weight(&delta_family(g, *s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.0;
        let squarefree = transversal_sum_basis(g, *s, &lim()).map_err(|e| e.to_string())?.1;
        if v > w || (squarefree && v != w) {
            return Err(fail(g, *s, format!("v = {v}, weight = {w}, squarefree = {squarefree}")));
        }
        equalities += usize::from(squarefree);
    }
    Ok(format!("{} pairs, {equalities} with squarefree initial ideal", sample.len()))
}

fn colon_is_radical_of_transversal_sum() -> Outcome {
    let mut count = 0;
    for g in graphs(5) {
        let ord = MonomialOrder::identity(g.n());
        let j = edge_ideal_gens(&g);
        if j.is_empty() {
            continue;
        }
        for s in min_cut_sets(&g).unwrap() {
            let p = prime_component(&g, s).map_err(|e| e.to_string())?;
            let colon = colon_ideal(&j, &p.gens, &ord, &lim()).map_err(|e| e.to_string())?;
            let sum: Vec<_> = j.iter().cloned().chain(transversal_ideal_generic(&g, s).map_err(|e| e.to_string())?).collect();
            for f in colon.generators() {
                if !radical_membership(f, &sum, &ord, &lim()).map_err(|e| e.to_string())? {
                    return Err(fail(&g, s, format!("{f} in the colon but not in the radical")));
                }
            }
            for f in &sum {
                if !radical_membership(f, colon.generators(), &ord, &lim()).map_err(|e| e.to_string())? {
                    return Err(fail(&g, s, format!("{f} in the radical but not in the colon")));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} (graph, cut) pairs"))
}

fn groebner_structure() -> Outcome {
    let gs = graphs(6);
    let mut bases = 0;
    let mut cuts = 0;
    for g in &gs {
        let n = g.n();
        let identity: Vec<usize> = (1..=n).collect();
        let reversed: Vec<usize> = (1..=n).rev().collect();
        for sigma in [identity, reversed] {
            admissible_path_basis(g, &sigma).map_err(|e| fail(g, VertexSet::EMPTY, e.to_string()))?;
            bases += 1;
        }
        for s in min_cut_sets(g).unwrap() {
            if s.is_empty() || is_minimal_kcut(g, s).unwrap().k != 2 {
                continue;
            }
            let check = combined_cut_basis(g, s).map_err(|e| e.to_string())?;
            if !check.is_groebner {
                return Err(fail(g, s, "combined basis fails the S-pair criterion".into()));
            }
            if !check.squarefree {
                return Err(fail(g, s, "combined basis has a non-squarefree leading monomial".into()));
            }
            cuts += 1;
        }
    }
    Ok(format!("{bases} path bases on {} graphs, {cuts} combined cut bases", gs.len()))
}

fn oracle_agrees() -> Outcome {
    let mut count = 0;
    for g in graphs(5) {
        for s in min_cut_sets(&g).unwrap() {
            let v = vnumber_at_prime(&g, s, &lim()).map_err(|e| e.to_string())?.v;
            let o = oracle_vnumber_at_prime(&g, s, &lim()).map_err(|e| e.to_string())?;
            if v != o {
                return Err(fail(&g, s, format!("algebraic {v}, oracle {o}")));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (graph, cut) pairs"))
}

fn decomposition() -> Outcome {
    let mut count = 0;
    for g in graphs(5) {
        let j = edge_ideal_gens(&g);
        if j.is_empty() {
            continue;
        }
        let ord = MonomialOrder::identity(g.n());
        let cuts: Vec<VertexSet> = enumerate_min_cuts(&g).unwrap().into_iter().map(|c| c.s).collect();
        let meet = intersect_primes(&g, &cuts, &ord, &lim()).map_err(|e| e.to_string())?;
        let gb = buchberger(&j, &ord, &lim()).map_err(|e| e.to_string())?;
        if meet != gb {
            return Err(fail(&g, VertexSet::EMPTY, "intersection of minimal primes differs".into()));
        }
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn cycle_windows() -> Outcome {
    let mut count = 0;
    for n in 3..=8 {
        let r = verify_cycle(n, &Default::default()).map_err(|e| e.to_string())?;
        if !r.complete {
            return Err(format!("C{n}: incomplete report"));
        }
        for p in &r.primes {
            let v = p.report.v.ok_or("missing value")?;
            let s = p.s();
            let w = localized_bounds(n, s).map_err(|e| e.to_string())?;
            let lower_ok = s.len() < 3 || v >= n - s.len();
            if !w.contains(v) || !lower_ok {
                return Err(format!("C{n} S={s}: v = {v}, window [{}, {}]", w.lo, w.hi));
            }
            count += 1;
        }
    }
    Ok(format!("{count} primes on C3..C8"))
}

fn saturation_lemmas() -> Outcome {
    let mut count = 0;
    for n in 3..=7 {
        for i in 1..=n {
            if !saturation_by_x_holds(n, i, &lim()).map_err(|e| e.to_string())? {
                return Err(format!("x-saturation fails on C{n}, i = {i}"));
            }
            count += 1;
            if n <= 6 {
                if !saturation_by_f_holds(n, i, &lim()).map_err(|e| e.to_string())? {
                    return Err(format!("f-saturation fails on C{n}, i = {i}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} checks"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let mins = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion { id: 1, name: "v at the empty cut equals connected domination, n <= 5", limit: mins(10), run: empty_cut_equals_domination },
        Criterion { id: 2, name: "v at minimal 2-cuts equals pair domination, n <= 6", limit: mins(20), run: two_cuts_equal_pair_domination },
        Criterion { id: 3, name: "C6 = 4; C7, C8 inside their global windows", limit: mins(90), run: cycle_globals },
        Criterion { id: 4, name: "v <= min transversal weight, equal when squarefree", limit: mins(20), run: transversal_upper_bound },
        Criterion { id: 5, name: "colon equals radical of J + transversal ideal, n <= 5", limit: mins(20), run: colon_is_radical_of_transversal_sum },
        Criterion { id: 6, name: "admissible-path and combined cut bases, n <= 6", limit: mins(20), run: groebner_structure },
        Criterion { id: 7, name: "decomposition oracle equals algebraic value, n <= 5", limit: mins(20), run: oracle_agrees },
        Criterion { id: 8, name: "intersection of minimal primes equals J_G, n <= 5", limit: mins(20), run: decomposition },
        Criterion { id: 9, name: "localized cycle values inside their windows, n <= 8", limit: mins(30), run: cycle_windows },
        Criterion { id: 10, name: "saturation leading-monomial checks on cycles", limit: mins(20), run: saturation_lemmas },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if took <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {took:.1?}, limit {:?}", c.limit)),
            Err(e) => ("FAIL", e),
        };
        failed += usize::from(verdict == "FAIL");
        println!("[{verdict}] criterion {:>2}: {} ({detail}; {took:.2?})", c.id, c.name);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
