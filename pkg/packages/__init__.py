# Packages