// Drive the `dilata` front end from a string instead of a file.

use dilatations::cli::{load, run, Config};

const INSTANCE: &str = "
ring A = QQ[a, g]
ideal M in A = (g)
center C on A = [M / a]
request present
request check
request iso monopoly
";

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = Config::default();
    let inst = load(INSTANCE, &[], &config)?;
    let out = run(&inst, &config);
    print!("{}", out.text);
    if out.exit_code != 0 {
        return Err(format!("exit code {}", out.exit_code).into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
