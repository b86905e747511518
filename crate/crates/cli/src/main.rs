use clap::Parser;
use rovib_cli::args::Cli;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = rovib_cli::run(&cli) {
        eprintln!("rovib: {e}");
        std::process::exit(e.exit_code());
    }
}
