use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = combdyn_cli::run(std::env::args_os());
    if code == 0 {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    ExitCode::from(code as u8)
}
