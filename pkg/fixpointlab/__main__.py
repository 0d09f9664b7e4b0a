from fixpointlab.main import main

main()
