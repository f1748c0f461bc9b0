from midk.cli import main

main()
