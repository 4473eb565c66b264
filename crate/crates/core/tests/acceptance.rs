//! The nine acceptance criteria, run at their stated scales.
//!
//! Runs without the libtest harness so that every criterion prints its own
//! line; the process fails if any criterion does.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use rrg::bijections::{first_reduction, psi, second_reduction};
use rrg::verify::{self, Cell, Corpus};
use rrg::{gordon_mark, ClassParams, Overpartition};

fn params(k_max: u32) -> impl Iterator<Item = ClassParams> {
    ClassParams::all_up_to(k_max)
}

fn verdict(cells: Vec<Cell>) -> Result<String, String> {
    match cells.iter().find(|c| !c.passed()) {
        Some(bad) => Err(bad.to_json_line()),
        None => Ok(format!("{} cells", cells.len())),
    }
}

fn only(cells: Vec<Cell>, identities: &[&str]) -> Vec<Cell> {
    cells.into_iter().filter(|c| identities.contains(&c.identity)).collect()
}

fn criterion_1() -> Result<String, String> {
    let mut cells = verify::thm14(5, 28);
    for p in params(5) {
        cells.extend(verify::thm17(p, 28));
    }
    verdict(cells)
}

fn criterion_2() -> Result<String, String> {
    let keep = ["D(m,n) = sum side", "H(-1/q; xq) = sum side", "W(m,n) = D(m,n)"];
    verdict(params(4).flat_map(|p| only(verify::thm16(p, 18), &keep)).collect())
}

fn criterion_3() -> Result<String, String> {
    let keep = [
        "F(m,n) = F sum side",
        "G(m,n) = G sum side",
        "F sum side + G sum side = sum side",
        "F and G constant terms are 1/2",
    ];
    verdict(params(4).flat_map(|p| only(verify::thm16(p, 16), &keep)).collect())
}

fn criterion_4() -> Result<String, String> {
    verdict(params(4).flat_map(|p| verify::enumerated_relations(p, 18)).collect())
}

fn criterion_5() -> Result<String, String> {
    let mut cells: Vec<Cell> = params(4).flat_map(|p| verify::series_recurrences(p, 24)).collect();
    cells.extend((2..=4).map(|k| verify::j_relations(k, 24)));
    verdict(cells)
}

fn criterion_6() -> Result<String, String> {
    let corpus = Corpus::new(14);
    let cells = params(4)
        .flat_map(|p| {
            [
                verify::phi_cell(p, &corpus),
                verify::psi_cell(p, &corpus),
                verify::chi_cell(p, &corpus),
            ]
        })
        .collect();
    verdict(cells)
}

fn criterion_7() -> Result<String, String> {
    let corpus = Corpus::new(20);
    verdict(params(4).flat_map(|p| verify::q_closed_form(p, 3, &corpus)).collect())
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// `n <weight>` then one `r | parts` line per mark, top row first.
fn block(lambda: &Overpartition, k: u32) -> String {
    let marking = gordon_mark(lambda);
    let mut out = format!("n {}\n", lambda.weight());
    for r in (1..k).rev() {
        let row: Vec<String> = marking.row(r).iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("{r} | {}\n", row.join(" ")));
    }
    out
}

/// The overpartition spelled by the first block of a fixture.
fn first_block(text: &str) -> Overpartition {
    let tokens: Vec<&str> = text
        .lines()
        .skip(1)
        .take_while(|l| !l.is_empty())
        .filter_map(|l| l.split_once(" | ").map(|(_, parts)| parts))
        .collect();
    tokens.join(" ").parse().expect("fixture parts")
}

fn same(name: &str, want: &str, got: &str) -> Result<(), String> {
    if want == got {
        Ok(())
    } else {
        Err(format!("{name} differs:\n--- fixture\n{want}--- produced\n{got}"))
    }
}

fn two_steps(
    name: &str,
    p: ClassParams,
    step: fn(&Overpartition, ClassParams) -> rrg::Result<Overpartition>,
) -> Result<(), String> {
    let want = fixture(name);
    let start = first_block(&want);
    let once = step(&start, p).map_err(|e| e.to_string())?;
    let twice = step(&once, p).map_err(|e| e.to_string())?;
    let got = [&start, &once, &twice].map(|l| block(l, p.k())).join("\n");
    same(name, &want, &got)
}

fn criterion_8() -> Result<String, String> {
    let p = ClassParams::new(4, 1).expect("k = 4, i = 1");

    for (name, parts) in [
        ("marking_ordinary.txt", "1,1,2,3,4,4,5,5,6,6,8,9"),
        ("marking_136.txt", "16,13,12,12,11,10~,8~,8,8,7,6~,6,5,5,4,2,2,1~"),
    ] {
        let lambda: Overpartition = parts.parse().expect("literal");
        same(name, &fixture(name), &gordon_mark(&lambda).grid())?;
    }

    two_steps("first_reduction.txt", p, first_reduction)?;
    two_steps("second_reduction.txt", p, second_reduction)?;

    let want = fixture("psi.txt");
    let alpha = first_block(&want);
    let out = psi(&alpha, p).map_err(|e| e.to_string())?;
    let got = format!("{}\ndelta {}\n\n{}", block(&alpha, 4), out.delta, block(&out.gamma, 4));
    same("psi.txt", &want, &got)?;

    Ok("5 fixtures".into())
}

fn criterion_9() -> Result<String, String> {
    let mut cells: Vec<Cell> = params(4).flat_map(|p| verify::andrews(p, 40)).collect();
    cells.extend(verify::classical(40));
    verdict(cells)
}

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("D = C = product = sum at x=1, k <= 5, n <= 28", criterion_1),
        ("D(m,n) = sum side = H(-1/q; xq) = W, k <= 4, n <= 18", criterion_2),
        (
            "F and G against their sum sides, halves at the origin, n <= 16",
            criterion_3,
        ),
        ("enumerated F/G shift, D recurrence and W = D, n <= 18", criterion_4),
        ("series recurrences and J relations to q^24", criterion_5),
        (
            "phi, psi, chi exhaustive round trips and images, weight <= 14",
            criterion_6,
        ),
        ("Q closed form for N_1 <= 3, k <= 4, n <= 20", criterion_7),
        ("worked examples byte-exact against fixtures", criterion_8),
        ("classical identities to q^40", criterion_9),
    ];
    let mut failed = 0;
    for (n, (what, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {what} ({detail}, {secs:.2}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {what} ({secs:.2}s)\n{why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
