// Placeholder; real CLI added with the pipeline modules.
int main() { return 0; }
