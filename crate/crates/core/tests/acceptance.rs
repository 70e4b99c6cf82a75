use qcharlier::verify::{run_all, Budget};

fn main() {
    let outcomes = run_all(Budget::unbounded());
    let mut failed = 0;
    for o in &outcomes {
        println!("{o}");
        if !o.passed() {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
