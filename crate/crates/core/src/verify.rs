//! Cross-module property suite for one family parameter `j`.

use crate::paths::{
    build_tree_observed, copies_of, level_limit, survivors_of, tree_census, zero1_inverse,
};
use crate::pattern::{avoiders, f_table, Pattern, Word};
use crate::riordan::{
    a_sequence_from_h, a_sequence_from_poly, d_closed, from_dh, h_closed, r_from_f,
    verify_a_matrix, verify_column_doubling, verify_recurrence_recra,
};
use crate::rules::{builtin_avoid_rule, expand};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

/// Number of occurrences of `p` in `word`, by a sliding window.
pub fn occurrences(word: &Word, p: &Pattern) -> usize {
    word.bits()
        .windows(p.len())
        .filter(|w| *w == p.bits())
        .count()
}

/// Runs every check for `j` with trees of `levels` levels. Triangles are
/// built to order `max(levels, j + 2)`.
pub fn run_suite(j: usize, levels: usize) -> Vec<CheckResult> {
    assert!(
        j >= 1 && levels <= level_limit(j),
        "parameters outside the guards"
    );
    let order = levels.max(j + 2);
    let p = Pattern::family(j);
    let mut out = Vec::new();

    let triangle = from_dh(&d_closed(j, order), &h_closed(j, order), order)
        .expect("closed forms give a proper pair");
    let (from_table, _) = r_from_f(&f_table(&p, order)).expect("integer table");
    out.push(CheckResult::new(
        "triangle/closed-form-vs-table",
        triangle == from_table,
        format!("order {order}"),
    ));

    let violations = verify_recurrence_recra(&triangle, j);
    out.push(CheckResult::new(
        "recurrence/recRA",
        violations.is_empty(),
        format!("{} violations", violations.len()),
    ));
    out.push(CheckResult::new(
        "recurrence/column-doubling",
        verify_column_doubling(&triangle),
        "",
    ));
    out.push(CheckResult::new(
        "recurrence/a-matrix",
        verify_a_matrix(&triangle, j),
        "",
    ));
    let a_poly = a_sequence_from_poly(j, order);
    let a_h = a_sequence_from_h(&h_closed(j, order + 1));
    out.push(CheckResult::new(
        "series/a-sequence-routes",
        matches!((&a_poly, &a_h), (Ok(x), Ok(y)) if x == y),
        "",
    ));

    let census = expand(&builtin_avoid_rule(j), levels);
    out.push(CheckResult::new(
        "census/rule-vs-triangle",
        census.matches_triangle(&triangle),
        format!("{levels} levels"),
    ));

    let mut round_trips = 0usize;
    let mut round_trip_failures = 0usize;
    let tree = build_tree_observed(j, levels, &mut |input, output| {
        round_trips += 1;
        if zero1_inverse(output).as_ref() != Ok(input) {
            round_trip_failures += 1;
        }
    })
    .expect("within guards");
    out.push(CheckResult::new(
        "census/tree-vs-rule",
        tree_census(&tree) == census,
        "",
    ));

    let mut survivor_errors = Vec::new();
    let mut copies_errors = Vec::new();
    for (n, nodes) in tree.iter().enumerate() {
        let mut expected = std::collections::BTreeSet::new();
        for k in 0..=n {
            expected.extend(avoiders(&p, n, k).expect("within enumeration limit"));
        }
        match survivors_of(nodes) {
            Ok(s) if s == expected => {}
            Ok(s) => survivor_errors.push(format!(
                "level {n}: {} survivors, {} avoiders",
                s.len(),
                expected.len()
            )),
            Err(e) => survivor_errors.push(format!("level {n}: {e}")),
        }
        for (word, (even, odd)) in copies_of(nodes) {
            let c = occurrences(&word, &p) as u32;
            let want = if c == 0 {
                (1, 0)
            } else {
                (1 << (c - 1), 1 << (c - 1))
            };
            if (even, odd) != want {
                copies_errors.push(format!("{word}: ({even},{odd}), want {want:?}"));
            }
        }
    }
    out.push(CheckResult::new(
        "paths/survivors",
        survivor_errors.is_empty(),
        survivor_errors.join("; "),
    ));
    out.push(CheckResult::new(
        "paths/copies-law",
        copies_errors.is_empty(),
        copies_errors
            .into_iter()
            .take(5)
            .collect::<Vec<_>>()
            .join("; "),
    ));
    out.push(CheckResult::new(
        "paths/zero1-round-trip",
        round_trip_failures == 0 && round_trips > 0,
        format!("{round_trips} inputs, {round_trip_failures} failures"),
    ));
    out
}
