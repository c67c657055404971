from cli.commands import main, run
