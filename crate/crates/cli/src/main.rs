use clap::Parser;

use cherlink_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (out, warnings) = run(&cli);
    for w in warnings {
        eprintln!("warning: {w}");
    }
    match out {
        Ok(s) => println!("{s}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
