use std::io::{self, Write};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = kauffman::cli::run(&args, &mut io::stdin().lock());
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
