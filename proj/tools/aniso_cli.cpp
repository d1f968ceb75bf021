// Placeholder entry point; full command set lands with the report layer.
int main() { return 0; }
