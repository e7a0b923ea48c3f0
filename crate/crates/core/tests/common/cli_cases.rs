use std::process::Command;

use super::fixture_path;

/// One documented invocation. Arguments starting with `@` name fixtures.
pub struct Case {
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Substrings the stdout must contain.
    pub expect: &'static [&'static str],
}

const fn case(args: &'static [&'static str], exit: i32, expect: &'static [&'static str]) -> Case {
    Case { args, exit, expect }
}

pub const CASES: &[Case] = &[
    case(
        &["fatgraph", "analyze", "@gamma2.json"],
        0,
        &[
            "\"boundary_cycles\":[[\"A\",\"B\",\"C\"],[\"A\u{304}\",\"D\u{304}\",\"E\",\"B\u{304}\",\"D\",\"C\u{304}\",\"E\u{304}\"]]",
            r#""genus":1"#,
            r#""boundary_components":2"#,
        ],
    ),
    case(
        &["fatgraph", "analyze", "@figure8.json"],
        0,
        &[r#""genus":0"#, r#""boundary_components":3"#],
    ),
    case(&["fatgraph", "analyze", "@bad_involution.json"], 2, &[]),
    case(&["fatgraph", "analyze", "@figure8.json", "--chord", "0,1"], 0, &[r#""type":[0,2,1]"#]),
    case(&["fatgraph", "analyze", "@chord_reduction.json", "--chord", "0"], 1, &[r#""valid":false"#]),
    case(
        &["tqft", "dw", "--group", "s3", "--genus", "1"],
        0,
        &[r#""invariant":"3""#, r#""brute_force":"3""#, "brute-force bundle count agrees"],
    ),
    case(&["tqft", "dw", "--group", "z2", "--genus", "2"], 0, &[r#""invariant":"8""#]),
    case(&["tqft", "dw", "--group", "z2", "--genus", "0"], 0, &[r#""invariant":"1/2""#]),
    case(&["tqft", "dw", "--group", "@z2_group.json", "--genus", "1"], 0, &[r#""invariant":"2""#]),
    case(&["tqft", "dw", "--group", "z0", "--genus", "1"], 2, &[]),
    case(
        &["tqft", "eval", "--algebra", "@dual_numbers.json", "--word", "@word_zigzag.json"],
        0,
        &[r#""matrix":[["1","0"],["0","1"]]"#],
    ),
    case(&["tqft", "surface", "--algebra", "@dual_numbers.json", "--genus", "1"], 0, &[r#""invariant":"2""#]),
    case(
        &["hochschild", "homology", "--algebra", "@dual_numbers.json", "--window", "0..3"],
        0,
        &["HH_* dims 2 1 1 1 on 0..3 (stable)", r#""stable":true"#],
    ),
    case(
        &["hochschild", "homology", "--algebra", "@ground_field.json", "--window", "0..3"],
        0,
        &["HH_* dims 1 0 0 0 on 0..3"],
    ),
    case(
        &["hochschild", "homology", "--algebra", "@dual_numbers.json", "--window", "0..12"],
        2,
        &[],
    ),
    case(
        &[
            "hochschild", "cohomology", "--algebra", "@dual_numbers.json", "--window", "0..2", "--cup", "0,1",
            "--bracket", "1,1",
        ],
        0,
        &[r#""cup":{"degrees":[0,1,1]"#, r#""bracket":{"degrees":[1,1,1]"#],
    ),
    case(&["check", "operad", "--preset", "ass", "--algebra", "@m2q.json"], 0, &["ass: all 2 clauses pass"]),
    case(
        &["check", "operad", "--preset", "ass", "--algebra", "@cross_product.json"],
        1,
        &[r#""name":"associativity","passed":false,"witness""#],
    ),
    case(&["check", "operad", "--preset", "lie", "--algebra", "@cross_product.json"], 0, &[]),
    case(
        &["check", "gbv", "--algebra", "@bv_exterior.json", "--convention", "both"],
        0,
        &["bv (gbv): all 9 clauses pass", "bv (sw): all 9 clauses pass"],
    ),
    case(&["check", "gbv", "--algebra", "@exterior1.json"], 2, &[]),
    case(
        &["check", "gbv", "--algebra", "@bv_square_nonzero.json", "--convention", "sw"],
        1,
        &["bv (sw): fails Δ² = 0"],
    ),
    case(
        &["check", "gbv", "--algebra", "@bv2_not_derivation.json", "--nplus1", "2"],
        1,
        &[r#""witness":["ξ1","ξ2"]"#],
    ),
    case(&["check", "gbv", "--algebra", "@bv2_not_derivation.json", "--nplus1", "3"], 2, &[]),
    case(&["cacti", "trace", "@cactus_one_lobe.json"], 0, &[r#"{"length":"1","lobe":1,"start":"0"}"#, "1 arc "]),
    case(&["cacti", "trace", "@cactus_four_lobes.json"], 0, &["lobes 1 2 1 3 4 1, total length 9/2"]),
    case(
        &["cacti", "compose", "@cactus_three_lobes.json", "2", "@cactus_one_lobe.json"],
        0,
        &["composite has 3 lobes"],
    ),
    case(
        &[
            "cacti", "compose", "@cactus_three_lobes.json", "2", "@cactus_four_lobes.json", "--assoc", "3",
            "@cactus_two_lobes.json",
        ],
        0,
        &["# equal"],
    ),
    case(&["cacti", "compose", "@cactus_two_lobes.json", "3", "@cactus_one_lobe.json"], 2, &[]),
    case(&["cacti", "trace", "@figure8.json"], 2, &[]),
    case(&["frobnicate"], 2, &[]),
];

pub fn resolve(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => fixture_path(name).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect()
}

/// Runs the built binary and returns (exit code, stdout).
pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_loopforge"))
        .args(resolve(args))
        .env("LOOPFORGE_THREADS", "2")
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), out.stdout)
}

/// Checks one case twice; returns a description of the first problem.
pub fn check_case(c: &Case) -> Result<(), String> {
    let (code, first) = run_binary(c.args);
    let (_, second) = run_binary(c.args);
    let shown = c.args.join(" ");
    if first != second {
        return Err(format!("{shown}: output differs between runs"));
    }
    if code != c.exit {
        return Err(format!("{shown}: exit {code}, expected {}", c.exit));
    }
    let text = String::from_utf8(first).map_err(|_| format!("{shown}: stdout is not UTF-8"))?;
    for e in c.expect {
        if !text.contains(e) {
            return Err(format!("{shown}: missing {e:?} in\n{text}"));
        }
    }
    Ok(())
}
