# Projektwurzel liegt auf sys.path, damit "from src..." in den Tests funktioniert
