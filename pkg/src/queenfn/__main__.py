from queenfn.cli import main

main()
