from dotgates.cli import main

main()
