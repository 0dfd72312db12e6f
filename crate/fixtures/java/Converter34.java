public class Converter34
{
  static boolean isEven(int x)
  {
    return x % 2 == 0;
  }

  public static void pattern(int rows)
  {
    for (int row = 1; row <= rows; row++)
    {
      for (int col = 0; col < row; col++)
      {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static void main(String[] args)
  {
    if (isEven(29))
    {
      System.out.println("even");
    }
    else
    {
      System.out.println("odd");
    }
    pattern(4);
  }
}
