fn main() -> std::process::ExitCode {
    tgrs::cli::main()
}
