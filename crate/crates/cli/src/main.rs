use clap::Parser;
use fzalg::{run, Args};

fn main() {
    let args = Args::parse();
    let (text, code) = run(&args);
    if code == 0 {
        print!("{text}");
    } else {
        // a failed --check still has a report worth printing
        if text.starts_with("error:") {
            eprint!("{text}");
        } else {
            print!("{text}");
        }
    }
    std::process::exit(code);
}
