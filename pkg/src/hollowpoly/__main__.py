from hollowpoly.cli import main

main()
