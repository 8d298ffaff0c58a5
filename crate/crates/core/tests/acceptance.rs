//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always
//! reach the terminal.

use std::fmt::Debug;
use std::process::ExitCode;

use kronecker::colored::{
    enumerate_blasiak, mixed_insertion_tableau, mixed_insertion_trace, ColoredTableau, ColoredWord,
};
use kronecker::nearhook::{
    fundamental_expansion, j_minus, j_plus, main_result_1, main_result_2, near_hook_kronecker, triple1, triple2,
    triple3, triple4, GBackend, TwoRowNearHook,
};
use kronecker::partition::Partition;
use kronecker::rosas::{phi, xi};
use kronecker::symfun::kronecker_coefficient_oracle;
use kronecker::tableau::{lr_coefficient, strip_chain_count};
use kronecker::verify::run_suite;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(rows: &[&str]) -> ColoredTableau {
    ColoredTableau::new(rows.iter().map(|r| r.parse::<ColoredWord>().unwrap().0).collect()).unwrap()
}

fn idx(items: &[(&str, usize, usize)]) -> Vec<(Partition, usize, usize)> {
    items.iter().map(|&(q, j, r)| (p(q), j, r)).collect()
}

#[derive(Default)]
struct Criterion {
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn eq<T: PartialEq + Debug>(&mut self, what: &str, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn report(&self, number: usize, title: &str) -> bool {
        let ok = self.failures.is_empty();
        println!("{} criterion {number}: {title} ({} checks)", if ok { "PASS" } else { "FAIL" }, self.checks);
        for f in &self.failures {
            println!("    {f}");
        }
        ok
    }
}

fn g(l: &str, m: &str, n: &str) -> i64 {
    kronecker_coefficient_oracle(&p(l), &p(m), &p(n)).unwrap() as i64
}

fn nearhook(l: &str, m: &str, n: &str) -> (String, i64) {
    let route = near_hook_kronecker(&p(l), &p(m), &p(n), GBackend::Rosas).unwrap();
    (route.name().to_string(), route.value())
}

fn golden_values() -> Criterion {
    let mut c = Criterion::default();
    let lr = |l: &str, m: &str, n: &str| lr_coefficient(&p(l), &p(m), &p(n));
    c.eq("c^4311_{321,21}", lr("4,3,1,1", "3,2,1", "2,1"), 2);
    c.eq("c^5421_{42,411}", lr("5,4,2,1", "4,2", "4,1,1"), 2);
    c.eq("c^65_{52,31}", lr("6,5", "5,2", "3,1"), 1);
    c.eq("c^5321_{43,31}", lr("5,3,2,1", "4,3", "3,1"), 1);
    c.eq("c^5321_{421,31}", lr("5,3,2,1", "4,2,1", "3,1"), 3);

    c.eq("g_{321,2211,411} oracle", g("3,2,1", "2,2,1,1", "4,1,1"), 2);
    c.eq("g_{321,2211,411} nearhook", nearhook("3,2,1", "2,2,1,1", "4,1,1").1, 2);

    c.eq("g_{42,42,42} oracle", g("4,2", "4,2", "4,2"), 2);
    let ex = fundamental_expansion(&p("4,2"), &p("4,2"), 4, 2, 0, GBackend::Rosas).unwrap();
    c.eq("g_{42,42,42} expansion", (ex.terms.len(), ex.value), (10, 2));

    c.eq("g_{521,41111,4211} oracle", g("5,2,1", "4,1^4", "4,2,1,1"), 5);
    c.eq("g_{521,41111,4211} blasiak", enumerate_blasiak(&p("5,2,1"), 4, &p("4,2,1,1")).unwrap().len(), 5);

    let params = TwoRowNearHook::new(4, 2, 3, 2, 1).unwrap();
    let nu = p("4,2");
    c.eq("triple1 (42,321,42)", triple1(&params, &nu, GBackend::Rosas).unwrap().value, 4);
    c.eq("triple2 (42,321,42)", triple2(&params, &nu, GBackend::Rosas).unwrap().value, 2);
    c.eq("g_{42,321,42} oracle", g("4,2", "3,2,1", "4,2"), 2);

    let params = TwoRowNearHook::new(4, 3, 3, 2, 2).unwrap();
    let nu = p("3,2,1,1");
    c.eq("triple3 (43,3211,3211)", triple3(&params, &nu, GBackend::Rosas).unwrap().value, 8);
    c.eq("triple4 (43,3211,3211)", triple4(&params, &nu, GBackend::Rosas).unwrap().value, 4);
    c.eq("g_{43,3211,3211} oracle", g("4,3", "3,2,1,1", "3,2,1,1"), 4);
    c.eq("g_{43,3211,3211} nearhook", nearhook("4,3", "3,2,1,1", "3,2,1,1").1, 4);

    c.eq("g_{52,3211,52} main result", main_result_1(3, 2, 5, 2, 2).unwrap().0, 0);
    c.eq("g_{52,3211,52} oracle", g("5,2", "3,2,1,1", "5,2"), 0);

    c.eq("g_{86,62111111,821111} main result", main_result_1(6, 6, 8, 6, 2).unwrap().0, 1);
    c.eq("g_{86,62111111,821111} oracle", g("8,6", "6,2,1^6", "8,2,1^4"), 1);

    c.eq("g_{54,321111,522} main result", main_result_2(3, 4, 5, 4, 3).unwrap().0, 1);
    c.eq("g_{54,321111,522} oracle", g("5,4", "3,2,1^4", "5,2,2"), 1);
    c.eq("g_{53,311111,422} oracle", g("5,3", "3,1^5", "4,2,2"), 1);

    c.eq("g_{(10,5),72111111,9222} main result", main_result_2(7, 6, 10, 5, 4).unwrap().0, 1);
    c.eq("g_{(10,5),72111111,9222} oracle", g("10,5", "7,2,1^6", "9,2,2,2"), 1);
    c.eq("g_{(10,4),71111111,8222} blasiak", enumerate_blasiak(&p("10,4"), 7, &p("8,2,2,2")).unwrap().len(), 1);

    c.eq("g_{63,2211111,42111} main result", main_result_1(2, 5, 6, 3, 2).unwrap().0, 1);
    c.eq("g_{63,2211111,42111} oracle", g("6,3", "2,2,1^5", "4,2,1,1,1"), 1);

    c.eq("Xi^[2]_{32111}(2,5)", xi(&p("3,2,1,1,1"), 2, 2, 5).unwrap(), 1);
    c.eq("Phi(2,3,3,0;6,2)", phi(2, 3, 3, 0, 6, 2), 1);
    c.eq("N_{5321,421,1,3}", strip_chain_count(&p("5,3,2,1"), &p("4,2,1"), 1, 3), 4);
    c.eq("N_{4211,221,1,2}", strip_chain_count(&p("4,2,1,1"), &p("2,2,1"), 1, 2), 2);
    c
}

fn golden_structures() -> Criterion {
    let mut c = Criterion::default();
    let mut five = vec![
        tab(&["1' 1 1 1", "1' 3'", "2'", "2"]),
        tab(&["1' 1 1 2'", "1' 2", "1'", "3"]),
        tab(&["1' 1 1 2'", "1' 3'", "1", "2"]),
        tab(&["1' 1 1 3'", "1' 2'", "1", "2"]),
        tab(&["1' 1 1 3'", "1' 2", "1'", "2"]),
    ];
    five.sort();
    c.eq("Blasiak tableaux (521, 4, 4211)", enumerate_blasiak(&p("5,2,1"), 4, &p("4,2,1,1")).unwrap(), five);

    let w: ColoredWord = "2' 1 1 2 1 1' 3' 1'".parse().unwrap();
    let trace = vec![
        tab(&["2'"]),
        tab(&["1 2'"]),
        tab(&["1 1 2'"]),
        tab(&["1 1 2' 2"]),
        tab(&["1 1 1 2'", "2"]),
        tab(&["1' 1 1 2'", "1", "2"]),
        tab(&["1' 1 1 2'", "1", "2", "3'"]),
        tab(&["1' 1 1 2'", "1' 3'", "1", "2"]),
    ];
    c.eq("mixed insertion trace", mixed_insertion_trace(&w), trace);

    let w: ColoredWord = "2' 1 4' 4 4' 3 1' 3".parse().unwrap();
    c.eq("P(2' 1 4' 4 4' 3 1' 3)", mixed_insertion_tableau(&w), tab(&["1' 2' 3 3", "1 4'", "4' 4"]));
    c.eq("blft(2' 1 4' 4 4' 3 1' 3)", w.blft(), vec![2, 4, 4, 1, 1, 4, 3, 3]);

    let nu = p("3,2,1,1");
    c.eq(
        "J+ for (3,2,2,4,3), 3211",
        j_plus(4, &nu, 3, 2, 2),
        idx(&[("3,2,1", 0, 2), ("3,2,1", 0, 3), ("3,1,1,1", 0, 2), ("3,1,1,1", 0, 3), ("2,2,1,1", 0, 2), ("2,2,1,1", 0, 3)]),
    );
    c.eq("J- for (3,2,2,4,3), 3211", j_minus(4, &nu, 3, 2, 2), idx(&[("2,2", 1, 2), ("2,1,1", 0, 1), ("2,1,1", 1, 1)]));
    c
}

fn suites(c: &mut Criterion, list: &[(&str, usize)]) {
    for &(name, n) in list {
        let report = run_suite(name, n, 0).unwrap();
        c.checks += report.checks as usize;
        if !report.passed() {
            c.failures.push(report.to_string().trim_end().to_string());
        }
    }
}

const ORACLE_SUITES: &[(&str, usize)] = &[
    ("blasiak-vs-oracle", 8),
    ("rosas-vs-oracle", 10),
    ("fundamental", 8),
    ("triples", 9),
    ("index-sets", 8),
    ("main-results", 10),
];

const IDENTITY_SUITES: &[(&str, usize)] = &[
    ("giambelli", 9),
    ("jacobi-trudi", 8),
    ("littlewood", 7),
    ("symmetry", 8),
    ("two-row-lr", 10),
    ("strip-difference", 8),
];

fn determinism() -> Criterion {
    let mut c = Criterion::default();
    for &(name, n) in ORACLE_SUITES.iter().chain(IDENTITY_SUITES) {
        let one = run_suite(name, n.min(7), 1).unwrap();
        let four = run_suite(name, n.min(7), 4).unwrap();
        c.eq(&format!("{name} text"), one.to_string(), four.to_string());
        c.eq(&format!("{name} json"), serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
    }
    c
}

fn main() -> ExitCode {
    let mut results = Vec::new();
    results.push(golden_values().report(1, "golden values"));
    results.push(golden_structures().report(2, "golden structures"));
    let mut c = Criterion::default();
    suites(&mut c, ORACLE_SUITES);
    results.push(c.report(3, "oracle equivalence"));
    let mut c = Criterion::default();
    suites(&mut c, IDENTITY_SUITES);
    results.push(c.report(4, "identity suites"));
    results.push(determinism().report(5, "determinism across worker counts"));
    if results.iter().all(|&ok| ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
