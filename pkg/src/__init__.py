# Prefix-free codes and symmetric trees workbench
