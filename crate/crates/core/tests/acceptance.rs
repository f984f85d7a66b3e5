//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use wordtree::paths::{build_tree_observed, copies_of, net_multiplicities, zero1_inverse};
use wordtree::pattern::{avoiders, count_automaton, count_bruteforce, f_table, Pattern, Word};
use wordtree::riordan::{
    a_sequence_from_h, a_sequence_from_poly, d_closed, from_dh, h_closed, r_from_f,
    verify_a_matrix, verify_column_doubling, verify_recurrence_recra, RiordanTriangle,
};
use wordtree::rules::{builtin_avoid_rule, builtin_catalan, builtin_catalan_marked, expand};
use wordtree::series::USeries;

const TABLE2: &str = include_str!("golden/table2.csv");
const TABLE3: &str = include_str!("golden/table3.csv");
const TABLE4: &str = include_str!("golden/table4.csv");

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn parse_csv(text: &str) -> Vec<Vec<BigInt>> {
    text.lines()
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

fn table2() -> Check {
    let got = f_table(&"11100".parse().unwrap(), 7)
        .to_integers()
        .map_err(|e| e.to_string())?;
    let want = parse_csv(TABLE2);
    ensure(want.iter().map(Vec::len).sum::<usize>() == 64, || {
        "golden has 64 entries".into()
    })?;
    ensure(got == want, || format!("grid differs: {got:?}"))?;
    ensure(
        got[7][7] == BigInt::from(2232) && got[4][4] == BigInt::from(58),
        || "corner entries".into(),
    )
}

fn tables3_4() -> Check {
    let (lower, upper) =
        r_from_f(&f_table(&"11100".parse().unwrap(), 7)).map_err(|e| e.to_string())?;
    ensure(lower.to_csv() == TABLE3, || {
        format!("lower triangle:\n{}", lower.to_csv())
    })?;
    ensure(upper.to_csv() == TABLE4, || {
        format!("upper triangle:\n{}", upper.to_csv())
    })?;
    let closed = from_dh(&d_closed(2, 7), &h_closed(2, 7), 7).map_err(|e| e.to_string())?;
    ensure(closed.to_csv() == TABLE3, || {
        format!("closed form:\n{}", closed.to_csv())
    })
}

fn a_series() -> Check {
    let want = USeries::from_ints(&[1, 1, 0, 2, -1, 7, -12, 38, -99, 281], 9);
    let poly = a_sequence_from_poly(2, 9).map_err(|e| e.to_string())?;
    ensure(poly == want, || format!("polynomial route: {poly}"))?;
    // Extraction from h loses one order: h to t^10 gives A to t^9.
    let from_h = a_sequence_from_h(&h_closed(2, 10)).map_err(|e| e.to_string())?;
    ensure(from_h == want, || format!("reversion route: {from_h}"))?;
    let short = a_sequence_from_h(&h_closed(2, 9)).map_err(|e| e.to_string())?;
    ensure(short == want.truncate(short.order()), || {
        format!("h to t^9: {short}")
    })
}

fn family_triangle(j: usize, n: usize) -> RiordanTriangle {
    from_dh(&d_closed(j, n), &h_closed(j, n), n).expect("proper pair")
}

fn recurrences() -> Check {
    for j in 1..=3 {
        let r = family_triangle(j, 12);
        let v = verify_recurrence_recra(&r, j);
        ensure(v.is_empty(), || {
            format!("j = {j}: recurrence violations {v:?}")
        })?;
        ensure(verify_column_doubling(&r), || {
            format!("j = {j}: column doubling")
        })?;
        ensure(verify_a_matrix(&r, j), || format!("j = {j}: A-matrix"))?;
    }
    Ok(())
}

fn oracles() -> Check {
    for p in ["110", "11100", "1111000", "101010"] {
        let pat: Pattern = p.parse().unwrap();
        let grid = f_table(&pat, 14).to_integers().map_err(|e| e.to_string())?;
        for n in 0..=14 {
            for k in 0..=14 - n {
                let gf = BigUint::try_from(grid[n][k].clone()).map_err(|e| e.to_string())?;
                let auto = count_automaton(&pat, n, k);
                let brute = count_bruteforce(&pat, n, k).map_err(|e| e.to_string())?;
                ensure(gf == auto && auto == brute, || {
                    format!("{p} at ({n},{k}): {gf} / {auto} / {brute}")
                })?;
            }
        }
    }
    Ok(())
}

fn census() -> Check {
    for j in 1..=3 {
        let c = expand(&builtin_avoid_rule(j), 10);
        ensure(c.matches_triangle(&family_triangle(j, 10)), || {
            format!("j = {j}")
        })?;
    }
    let plain = expand(&builtin_catalan(), 10);
    let marked = expand(&builtin_catalan_marked(), 10);
    let catalan = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
    for (n, &c) in catalan.iter().enumerate() {
        ensure(plain.total(n) == BigInt::from(c), || {
            format!("plain level {n}: {}", plain.total(n))
        })?;
        ensure(marked.total(n) == BigInt::from(c), || {
            format!("marked level {n}: {}", marked.total(n))
        })?;
    }
    Ok(())
}

/// Sliding-window occurrence count, written independently of the library.
fn occurrences(word: &Word, p: &[u8]) -> usize {
    let bits = word.bits();
    if bits.len() < p.len() {
        return 0;
    }
    (0..=bits.len() - p.len())
        .filter(|&i| &bits[i..i + p.len()] == p)
        .count()
}

struct ConstructionReport {
    survivors: Check,
    copies: Check,
    round_trips: Check,
}

fn construction() -> ConstructionReport {
    let mut survivors = Ok(());
    let mut copies = Ok(());
    let mut round_trips = Ok(());
    let mut seen_four_copies = false;
    for (j, max_n) in [(1usize, 7usize), (2, 6)] {
        let p = Pattern::family(j);
        let mut inputs = 0usize;
        let mut failures = Vec::new();
        let tree = match build_tree_observed(j, max_n, &mut |input, output| {
            inputs += 1;
            if zero1_inverse(output).as_ref() != Ok(input) {
                failures.push(format!("{input} -> {output}"));
            }
        }) {
            Ok(t) => t,
            Err(e) => {
                let msg = Err(format!("j = {j}: {e}"));
                return ConstructionReport {
                    survivors: msg.clone(),
                    copies: msg.clone(),
                    round_trips: msg,
                };
            }
        };
        if round_trips.is_ok() && (inputs == 0 || !failures.is_empty()) {
            round_trips = Err(format!(
                "j = {j}: {inputs} inputs, failures {:?}",
                &failures[..failures.len().min(5)]
            ));
        }
        for (n, nodes) in tree.iter().enumerate() {
            let mut expected = BTreeSet::new();
            for k in 0..=n {
                expected.extend(avoiders(&p, n, k).expect("small"));
            }
            let net = net_multiplicities(nodes);
            let got: BTreeSet<Word> = net
                .iter()
                .filter(|(_, &m)| m != 0)
                .map(|(w, _)| w.clone())
                .collect();
            if survivors.is_ok() {
                if got != expected {
                    survivors = Err(format!("j = {j}, n = {n}: survivor set differs"));
                } else if let Some((w, m)) = net.iter().find(|(w, &m)| {
                    if expected.contains(*w) {
                        m != 1
                    } else {
                        m != 0
                    }
                }) {
                    survivors = Err(format!("j = {j}, n = {n}: {w} nets to {m}"));
                }
            }
            for (w, (even, odd)) in copies_of(nodes) {
                let c = occurrences(&w, p.bits()) as u32;
                let want = if c == 0 {
                    (1, 0)
                } else {
                    (1u64 << (c - 1), 1u64 << (c - 1))
                };
                if c == 2 && even + odd == 4 {
                    seen_four_copies = true;
                }
                if copies.is_ok() && (even, odd) != want {
                    copies = Err(format!("j = {j}: {w} has ({even},{odd}), want {want:?}"));
                }
            }
        }
    }
    if copies.is_ok() && !seen_four_copies {
        copies = Err("no word with two occurrences and four copies".into());
    }
    ConstructionReport {
        survivors,
        copies,
        round_trips,
    }
}

fn timed(f: impl FnOnce() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed())
}

fn main() {
    let mut results: Vec<(&str, Check, Duration)> = Vec::new();
    let named: [(&str, fn() -> Check); 6] = [
        ("1 table of avoider counts for 11100", table2),
        ("2 lower and upper triangles", tables3_4),
        ("3 A-sequence for j = 2", a_series),
        ("4 recurrence suite for j = 1..3", recurrences),
        ("5 three counting oracles agree", oracles),
        ("6 succession rule census", census),
    ];
    for (name, f) in named {
        let (r, t) = timed(f);
        results.push((name, r, t));
    }
    let start = Instant::now();
    let report = construction();
    let t = start.elapsed();
    results.push(("7 construction survivors", report.survivors, t));
    results.push(("8 copies law", report.copies, t));
    results.push(("9 zero1 round trip", report.round_trips, t));

    let mut failed = 0;
    for (name, r, t) in &results {
        match r {
            Ok(()) => println!("PASS {name} ({:.2?})", t),
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({:.2?}): {e}", t);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
