u 4
set 2 0 1 2
set 1 0 3
set 2 1 2 3
