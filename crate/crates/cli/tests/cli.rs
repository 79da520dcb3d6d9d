use std::collections::BTreeSet;
use std::process::Command as Process;

use clap::CommandFactory;
use serde_json::Value;

use moorops::moorecalc::UctSequence;
use moorops::opsclassify::{ClassificationReport, ExtOperations, SignReport};
use moorops_cli::{command_path, run, Cli, Output, DISPATCH};

fn moorops(args: &[&str]) -> Output {
    run(std::iter::once("moorops").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value, String) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = moorops(&full);
    let v: Value = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout));
    (out.code, v, out.stdout)
}

/// One invocation per leaf subcommand.
const SAMPLES: &[&[&str]] = &[
    &["group", "canon", "Z^2 + Z/4 + Z/6"],
    &["group", "order", "Z/4 + Z/6"],
    &["group", "sum", "Z/2", "Z/3", "Z"],
    &["group", "snf", "2, 4; 6, 8"],
    &["group", "cokernel", "2 0; 0 3"],
    &["functor", "hom", "Z/4", "Z/6"],
    &["functor", "ext", "Z/4", "Z"],
    &["functor", "tensor", "Z/4", "Z/6"],
    &["functor", "tor", "Z/4", "Z/6"],
    &["oracle", "hom-count", "Z/4 + Z/2", "Z/6"],
    &["oracle", "ext", "Z/4", "Z/6"],
    &["oracle", "tensor", "Z/4", "Z/6"],
    &["chain", "moore", "--g", "Z/3 + Z", "--n", "3"],
    &[
        "chain", "tensor", "--g1", "Z/4", "--q1", "3", "--g2", "Z/6", "--q2", "2",
    ],
    &[
        "chain", "homology", "--g1", "Z/4", "--q1", "3", "--g2", "Z/6", "--q2", "2",
    ],
    &[
        "chain", "kunneth", "--g1", "Z/4", "--q1", "3", "--g2", "Z/6", "--q2", "2",
    ],
    &["moore", "decompose", "--a", "Z/3@4", "--b", "Z/6@5"],
    &["moore", "stem", "--g", "Z + Z/3", "--k", "1", "--n", "4"],
    &[
        "moore",
        "pi",
        "--space",
        "Z/3@4 | Z@5",
        "--n",
        "4",
        "--coeff",
        "Z/3",
    ],
    &["ops", "classify", "--type", "Z/3,Z/3,Z/3;4,4,7"],
    &["ops", "range", "--type", "Z,Z,Z;3,3,5"],
    &["ops", "trivial", "--type", "Z,Z,Z;4,4,5"],
    &["ops", "bo", "--type", "Z,Z,Z/5;4,4,6"],
    &["ops", "special-kind", "--type", "Z/3,Z/3,Z/3;4,4,8"],
    &["ops", "count", "--type", "Z/3,Z/3,Z/3;4,4,7"],
    &[
        "ops",
        "count-whitehead",
        "--g1",
        "Z/3",
        "--g2",
        "Z/3",
        "--q1",
        "4",
        "--q2",
        "4",
    ],
    &[
        "ops",
        "torsion-exists",
        "--m",
        "4",
        "--n",
        "6",
        "--q1",
        "4",
        "--q2",
        "4",
    ],
    &["ops", "ext-enumerate", "--k", "4", "--q1", "3", "--q2", "3"],
    &["ops", "sign", "--kind", "w", "--q1", "3", "--q2", "4"],
    &["ops", "shift", "--n", "5"],
    &["maps", "check", "--max-denominator", "3", "--samples", "5"],
    &[
        "maps", "lambda", "--a", "1", "--b", "2", "--t", "1/4", "--u", "1/3",
    ],
    &[
        "maps", "phi", "--a", "1", "--b", "2", "--t", "3/4", "--u", "1/3", "--s", "1/2",
    ],
    &[
        "maps", "sigma", "--a", "1", "--b", "2", "--t", "1/4", "--u", "1/3",
    ],
    &["maps", "mu-prime", "--a", "1", "--b", "*", "--t", "1/4"],
    &["verify", "all", "--quick"],
];

fn leaf_paths(cmd: &clap::Command, prefix: &str, out: &mut Vec<String>) {
    for sub in cmd.get_subcommands().filter(|s| s.get_name() != "help") {
        let path = if prefix.is_empty() {
            sub.get_name().to_string()
        } else {
            format!("{prefix} {}", sub.get_name())
        };
        if sub.has_subcommands() {
            leaf_paths(sub, &path, out);
        } else {
            out.push(path);
        }
    }
}

#[test]
fn dispatch_table_covers_every_subcommand_once() {
    let mut leaves = Vec::new();
    leaf_paths(&Cli::command(), "", &mut leaves);
    let table: Vec<&str> = DISPATCH.iter().map(|(p, _)| *p).collect();
    let leaf_set: BTreeSet<&str> = leaves.iter().map(String::as_str).collect();
    let table_set: BTreeSet<&str> = table.iter().copied().collect();
    assert_eq!(leaf_set, table_set);
    assert_eq!(
        table.len(),
        table_set.len(),
        "duplicate subcommand in dispatch table"
    );

    let ops: Vec<&str> = DISPATCH.iter().map(|(_, op)| *op).collect();
    let op_set: BTreeSet<&str> = ops.iter().copied().collect();
    assert_eq!(
        ops.len(),
        op_set.len(),
        "operation reachable from two subcommands"
    );
    let required = [
        "smith_normal_form",
        "cokernel",
        "direct_sum",
        "order",
        "tensor",
        "tor",
        "hom",
        "ext",
        "oracle_hom_count",
        "oracle_ext",
        "oracle_tensor",
        "moore_complex",
        "tensor_complex",
        "homology",
        "kunneth_check",
        "smash_decompose",
        "stem",
        "homotopy_with_coeffs",
        "basic_range_check",
        "triviality_check",
        "bo_group",
        "special_kind",
        "count_special_ops",
        "torsion_exists",
        "ext_ops_enumerate",
        "commutativity_sign",
        "neisendorfer_shift",
        "eval_lambda",
        "eval_phi",
        "eval_sigma",
        "eval_mu_prime",
        "parse_group_expr",
    ];
    for op in required {
        assert!(op_set.contains(op), "{op} has no subcommand");
    }
}

#[test]
fn samples_parse_to_their_paths_and_succeed() {
    let mut seen = BTreeSet::new();
    for args in SAMPLES {
        let cli = <Cli as clap::Parser>::try_parse_from(
            std::iter::once("moorops").chain(args.iter().copied()),
        )
        .unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let path = command_path(&cli.command);
        assert_eq!(path, args[..2].join(" "));
        seen.insert(path);
        let out = moorops(args);
        // The quick suite and the identity grid include the Φ_s quotient check, which fails.
        let expected = if matches!(path, "verify all" | "maps check") {
            1
        } else {
            0
        };
        assert_eq!(out.code, expected, "{args:?}: {}{}", out.stdout, out.stderr);
    }
    assert_eq!(seen.len(), DISPATCH.len());
}

#[test]
fn json_reports_round_trip() {
    for args in SAMPLES {
        let (_, v, raw) = json(args);
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, raw, "{args:?}");
    }
    for args in [
        &["moore", "decompose", "--a", "Z/2@4", "--b", "Z/2@5"][..],
        &["group", "canon", "Z/0"],
        &["ops", "range"],
    ] {
        let (_, v, raw) = json(args);
        assert!(v["error"]["kind"].is_string());
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", raw);
    }
}

#[test]
fn typed_reports_deserialize() {
    let (_, v, _) = json(&["ops", "bo", "--type", "Z,Z,Z/5;4,4,6"]);
    let s: UctSequence = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&s).unwrap(), v);
    assert!(s.is_multiplicative());

    let (_, v, _) = json(&["ops", "classify", "--type", "Z/3,Z/3,Z/3;4,4,7"]);
    let r: ClassificationReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&r).unwrap(), v);

    let (_, v, _) = json(&["ops", "ext-enumerate", "--k", "5", "--q1", "3", "--q2", "4"]);
    let e: ExtOperations = serde_json::from_value(v).unwrap();
    assert_eq!(e.operations.len(), 5);

    let (_, v, _) = json(&["ops", "sign", "--kind", "t", "--q1", "4", "--q2", "4"]);
    let s: SignReport = serde_json::from_value(v).unwrap();
    assert_eq!((s.epsilon, s.sign), (17, -1));
}

#[test]
fn documented_examples() {
    let out = moorops(&["group", "canon", "Z/2 + Z/3"]);
    assert_eq!((out.code, out.stdout.trim()), (0, "Z/6"));

    let (code, v, _) = json(&[
        "ops",
        "torsion-exists",
        "--m",
        "2",
        "--n",
        "2",
        "--q1",
        "4",
        "--q2",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["exists"], Value::Bool(false));

    let (code, v, _) = json(&["moore", "decompose", "--a", "Z/2@4", "--b", "Z/2@5"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "Unsupported2Torsion");

    let (code, v, _) = json(&["group", "canon", "Z^2 + Z/4 + Z/6"]);
    assert_eq!(code, 0);
    assert_eq!(v["group"], "Z^2 + Z/2 + Z/12");

    let (_, v, _) = json(&[
        "ops",
        "count-whitehead",
        "--g1",
        "Z/3",
        "--g2",
        "Z/3",
        "--q1",
        "4",
        "--q2",
        "4",
    ]);
    assert_eq!(v["count"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(moorops(&["group", "canon", "Z/1"]).code, 2);
    assert_eq!(moorops(&["group", "canon", "Z/"]).code, 2);
    assert_eq!(moorops(&["nonsense"]).code, 2);
    assert_eq!(
        moorops(&["ops", "range", "--type", "Z,Z,Z;3,3,5", "--frobnicate"]).code,
        2
    );
    // Domain errors.
    assert_eq!(
        moorops(&["moore", "stem", "--g", "Z/3", "--k", "2", "--n", "5"]).code,
        1
    );
    assert_eq!(moorops(&["ops", "shift", "--n", "1"]).code, 1);
    assert_eq!(moorops(&["ops", "count", "--type", "Z,Z,Z;4,4,4"]).code, 1);
    let out = moorops(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn oracle_flag_reports_agreement() {
    let (_, v, _) = json(&["functor", "tor", "Z/12 + Z/2", "Z/18", "--oracle"]);
    assert_eq!(v["oracle"]["agrees"], Value::Bool(true));
    let (_, v, _) = json(&[
        "moore",
        "pi",
        "--space",
        "Z/3@4 | Z@5",
        "--n",
        "4",
        "--coeff",
        "Z/3",
        "--oracle",
    ]);
    assert_eq!(v["oracle"]["agrees"], Value::Bool(true));
    // Infinite groups are outside the oracle's reach; that is reported, not fatal.
    let (code, v, _) = json(&["functor", "hom", "Z", "Z/4", "--oracle"]);
    assert_eq!(code, 0);
    assert!(v["oracle"]["error"]["kind"].is_string());
}

#[test]
fn user_stem_table_overrides_builtin() {
    let dir = std::env::temp_dir().join(format!("moorops-stems-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stems.txt");
    std::fs::write(
        &path,
        "version=2\nclass=Z/2, stem=1, value=Z/4, provenance=test override\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (_, v, _) = json(&[
        "moore",
        "stem",
        "--g",
        "Z/2",
        "--k",
        "1",
        "--n",
        "4",
        "--stem-table",
        p,
    ]);
    assert_eq!(v["value"], "Z/4");
    let (_, v, _) = json(&["moore", "stem", "--g", "Z/2", "--k", "1", "--n", "4"]);
    assert_eq!(v["value"], "Z/2");
    let (code, v, _) = json(&[
        "moore",
        "stem",
        "--g",
        "Z/2",
        "--k",
        "1",
        "--n",
        "4",
        "--stem-table",
        "/nonexistent/x",
    ]);
    assert_eq!(code, 2);
    assert!(v["error"]["kind"].is_string());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_moorops");
    let out = Process::new(bin)
        .args([
            "ops", "sign", "--kind", "w", "--q1", "3", "--q2", "3", "--json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let lib = moorops(&[
        "ops", "sign", "--kind", "w", "--q1", "3", "--q2", "3", "--json",
    ]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);

    let out = Process::new(bin)
        .args(["moore", "decompose", "--a", "Z/2@4", "--b", "Z/2@5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("Unsupported2Torsion"));
}
