// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero on any failure not listed in KNOWN_FAILURES.

use gyrometric::axioms::{
    check_symmetry_identity, check_symmetry_identity_unnegated, check_triangle_identity,
};
use gyrometric::cli::run;
use gyrometric::models::MobiusDisk;
use gyrometric::prelude::*;
use gyrometric::prenorm::refinement_check;
use std::process::ExitCode;

const SAMPLES: usize = 10_000;
const SEED: u64 = 2024;

/// Criteria that cannot hold as stated. Each entry is paired with the reason
/// printed next to its FAIL line.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    3,
    "the un-negated symmetry identity is false; the negated form and the \
     N-level statement hold",
)];

struct Outcome {
    passed: bool,
    detail: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: true,
            detail: Vec::new(),
        }
    }

    fn report(&mut self, what: &str, r: &CheckReport) {
        self.line(
            what,
            r.passed,
            format!("max violation {:.3e}", r.max_violation),
        );
    }

    fn suite(&mut self, what: &str, s: &CheckSuite) {
        let note = match s.first_failure() {
            Some(c) => format!(
                "{} failed, max violation {:.3e}",
                c.property, c.max_violation
            ),
            None => format!("max violation {:.3e}", s.max_violation()),
        };
        self.line(what, s.passed, note);
    }

    fn line(&mut self, what: &str, ok: bool, note: String) {
        self.passed &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.detail.push(format!("    {mark} {what}: {note}"));
    }
}

fn fixture(name: &str) -> CayleyTable {
    CayleyTable::from_path(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))
        .expect("fixture parses")
}

fn sampling() -> Sampling {
    Sampling::new(SEED, SAMPLES)
}

fn finite_models() -> Vec<(&'static str, TableGyrogroup)> {
    vec![
        ("Z4", make_group_adapter(fixture("z4.json")).unwrap()),
        (
            "Klein-4",
            make_group_adapter(fixture("klein4.json")).unwrap(),
        ),
        ("order-8", make_table_gyrogroup(fixture("g8.json")).unwrap()),
    ]
}

fn axiom_suite() -> Outcome {
    let mut o = Outcome::new();
    o.suite("Möbius", &check_axioms(&make_mobius(), &sampling(), 1e-9));
    o.suite(
        "Einstein",
        &check_axioms(&make_einstein(), &sampling(), 1e-9),
    );
    for (name, g) in finite_models().into_iter().take(2) {
        o.suite(name, &check_axioms(&g, &sampling(), 0.0));
    }
    o
}

fn gyrator_weld() -> Outcome {
    let mut o = Outcome::new();
    let disk = make_mobius();
    o.report(
        "closed form vs derived",
        &check_gyrator_weld(&disk, &sampling(), 1e-9),
    );
    let mut rng = sampling().rng(100);
    let mut unimodular = CheckReport::builder("unimodular factor", 1e-12);
    for _ in 0..SAMPLES {
        let a = disk.sample(&mut rng);
        let b = disk.sample(&mut rng);
        let v = (MobiusDisk::gyration_factor(&a, &b).norm() - 1.0).abs();
        unimodular.record(v, || vec![a.to_string(), b.to_string()]);
    }
    o.report("unimodular factor", &unimodular.finish());
    o
}

fn proof_step_identities() -> Outcome {
    let mut o = Outcome::new();
    let s = sampling();
    o.report(
        "Möbius symmetry as stated",
        &check_symmetry_identity_unnegated(&make_mobius(), &s, 1e-9),
    );
    o.report(
        "Einstein symmetry as stated",
        &check_symmetry_identity_unnegated(&make_einstein(), &s, 1e-9),
    );
    for (name, g) in finite_models() {
        o.report(
            &format!("{name} symmetry as stated"),
            &check_symmetry_identity_unnegated(&g, &s, 0.0),
        );
    }
    o.report(
        "Möbius symmetry, negated form",
        &check_symmetry_identity(&make_mobius(), &s, 1e-9),
    );
    o.report(
        "Einstein symmetry, negated form",
        &check_symmetry_identity(&make_einstein(), &s, 1e-9),
    );
    for (name, g) in finite_models() {
        o.report(
            &format!("{name} symmetry, negated form"),
            &check_symmetry_identity(&g, &s, 0.0),
        );
    }
    o.report("Möbius symmetry inside N", &n_level_symmetry());
    o.report(
        "Möbius triangle step",
        &check_triangle_identity(&make_mobius(), &s, 1e-9),
    );
    o.report(
        "Einstein triangle step",
        &check_triangle_identity(&make_einstein(), &s, 1e-9),
    );
    for (name, g) in finite_models() {
        o.report(
            &format!("{name} triangle step"),
            &check_triangle_identity(&g, &s, 0.0),
        );
    }
    o
}

/// `N(⊖y ⊕ x) = N(gyr[⊖y, x](⊖x ⊕ y))`, compared exactly.
fn n_level_symmetry() -> CheckReport {
    let disk = make_mobius();
    let f = build_dyadic_family(&build_chain(0.8, 12).unwrap(), 12).unwrap();
    let mut rng = sampling().rng(101);
    let mut check = CheckReport::builder("symmetry inside N", 0.0);
    for _ in 0..SAMPLES {
        let x = disk.sample(&mut rng);
        let y = disk.sample(&mut rng);
        let lhs = disk.add(&disk.neg(&y), &x);
        let rhs = disk.gyration(&disk.neg(&y), &x, &disk.add(&disk.neg(&x), &y));
        let v = (prenorm(&f, &disk, &lhs).unwrap() - prenorm(&f, &disk, &rhs).unwrap()).abs();
        check.record(v, || vec![x.to_string(), y.to_string()]);
    }
    check.finish()
}

fn chain_correctness() -> Outcome {
    let mut o = Outcome::new();
    for r0 in [0.3, 0.5, 0.8, 0.95] {
        let chain = build_chain(r0, 30).unwrap();
        let mut halving = CheckReport::builder(format!("s ⊕ s = r for r0 = {r0}"), 1e-12);
        for n in 0..30 {
            let s = chain.radius(n + 1);
            halving.record((scalar_add(s, s) - chain.radius(n)).abs(), || {
                vec![n.to_string()]
            });
        }
        o.report(&format!("r0 = {r0} halving"), &halving.finish());
        let last = chain.radius(30);
        o.line(
            &format!("r0 = {r0} r30 < 1e-7"),
            last < 1e-7,
            format!("r30 = {last:.3e}"),
        );
    }
    o
}

fn dyadic_audit() -> Outcome {
    let mut o = Outcome::new();
    let f = build_dyadic_family(&build_chain(0.8, 12).unwrap(), 12).unwrap();
    o.suite("r0 = 0.8, depth 12", &f.audit());
    o
}

fn prenorm_conclusions() -> Outcome {
    let mut o = Outcome::new();
    let disk = make_mobius();
    let chain = build_chain(0.8, 12).unwrap();
    let f = build_dyadic_family(&chain, 12).unwrap();
    o.report(
        "gyration invariance",
        &gyration_invariance_check(&f, &disk, &sampling()),
    );
    for n in 1..=10 {
        o.suite(
            &format!("sandwich n = {n}"),
            &sandwich_check(&f, &disk, n, &sampling()).unwrap(),
        );
    }
    let coarse = build_dyadic_family(&chain, 8).unwrap();
    let mut rng = Sampling::new(SEED, 1_000).rng(102);
    let points: Vec<_> = (0..1_000).map(|_| disk.sample(&mut rng)).collect();
    o.report(
        "refinement 8 -> 12",
        &refinement_check(&coarse, &f, &disk, &points),
    );
    o
}

fn metric_axioms() -> Outcome {
    let mut o = Outcome::new();
    let f = build_dyadic_family(&build_chain(0.8, 12).unwrap(), 12).unwrap();
    o.suite(
        "Möbius triples",
        &metric_axiom_check(&f, &make_mobius(), &sampling(), 1e-9),
    );
    o
}

fn quotient_suite() -> Outcome {
    let mut o = Outcome::new();
    for (name, g) in finite_models() {
        let n = g.order();
        let mut found = 0;
        let mut ok = true;
        for mask in 1u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let h = SubgyroCandidate::from_elements(members.clone()).unwrap();
            if !is_subgyrogroup(&g, &h).passed
                || !is_l_subgyrogroup(&g, &h, &Sampling::new(0, 1)).passed
            {
                continue;
            }
            found += 1;
            let Ok(p) = left_cosets(&g, &h) else {
                ok = false;
                continue;
            };
            let mut seen = vec![0; n];
            for block in p.blocks() {
                ok &= block.len() == members.len();
                block.iter().for_each(|&x| seen[x] += 1);
            }
            ok &= seen.iter().all(|&c| c == 1) && n == members.len() * p.len();
        }
        o.line(
            &format!("{name} cosets"),
            ok && found > 0,
            format!("{found} L-subgyrogroups"),
        );

        let mut separation = true;
        for x in 0..n {
            for y in 0..n {
                separation &= q_image(&g, &[(x, y)]).unwrap().contains_identity == (x == y);
            }
        }
        let off: Vec<_> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        separation &= !q_image(&g, &off).unwrap().contains_identity;
        o.line(
            &format!("{name} q-image separation"),
            separation,
            format!("{} pairs", n * n),
        );
    }
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    let g8 = format!("table:{}/fixtures/g8.json", env!("CARGO_MANIFEST_DIR"));
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "verify-axioms",
            "--model",
            "mobius",
            "--samples",
            "2000",
            "--seed",
            "9",
        ],
        vec![
            "verify-axioms",
            "--model",
            "einstein",
            "--samples",
            "2000",
            "--seed",
            "9",
        ],
        vec!["validate-table", "--model", &g8],
        vec!["build-metric", "--samples", "2000", "--seed", "9"],
        vec!["sandwich", "--samples", "2000", "--seed", "9"],
        vec!["quotient", "--model", &g8, "--sub", "0,7"],
        vec!["q-image", "--samples", "2000", "--seed", "9", "--diagonal"],
    ];
    for args in commands {
        let once = || {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = run(
                std::iter::once("gyro").chain(args.iter().copied()),
                &mut out,
                &mut err,
            );
            (code, out)
        };
        let (a, b) = (once(), once());
        o.line(
            &args[0..1].join(" "),
            a == b && a.0 == 0,
            format!("{} bytes", a.1.len()),
        );
    }
    o
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "axiom suite", axiom_suite),
        (2, "gyrator-identity weld", gyrator_weld),
        (3, "proof-step identities", proof_step_identities),
        (4, "chain correctness", chain_correctness),
        (5, "dyadic family audit", dyadic_audit),
        (6, "prenorm conclusions", prenorm_conclusions),
        (7, "metric axioms", metric_axioms),
        (8, "quotient suite", quotient_suite),
        (9, "determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run_criterion) in criteria {
        let outcome = run_criterion();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        match known {
            Some((_, why)) if !outcome.passed => {
                println!("{verdict} criterion {id}: {title} (known: {why})")
            }
            _ => println!("{verdict} criterion {id}: {title}"),
        }
        for line in &outcome.detail {
            println!("{line}");
        }
        if outcome.passed == known.is_some() {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all results as recorded");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected result for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
