fn main() -> std::process::ExitCode {
    pariton::cli::main()
}
