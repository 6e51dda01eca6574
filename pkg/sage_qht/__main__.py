from sage_qht.cli import main

main()
